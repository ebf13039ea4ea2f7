#include "tbase/mesh.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace tbase {

void build_adjacency(QuadMesh& mesh) {
  const int n = mesh.node_count();
  mesh.incident.assign(n, {});
  for (int qi = 0; qi < mesh.quad_count(); ++qi) {
    const Quad& q = mesh.quads[qi];
    for (int c = 0; c < 4; ++c) {
      const NodeId v = q.corners[c];
      if (v < 0 || v >= n)
        throw MeshError("quad " + std::to_string(qi) + " references node " +
                        std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
      for (int d = c + 1; d < 4; ++d)
        if (q.corners[d] == v)
          throw MeshError("quad " + std::to_string(qi) + " repeats node " +
                          std::to_string(v));
    }
    for (NodeId v : q.corners) mesh.incident[v].push_back(qi);
  }
}

namespace {

using Edge = std::pair<NodeId, NodeId>;

Edge make_edge(NodeId a, NodeId b) { return {std::min(a, b), std::max(a, b)}; }

std::map<Edge, std::vector<int>> edge_to_quads(const QuadMesh& mesh) {
  std::map<Edge, std::vector<int>> m;
  for (int qi = 0; qi < mesh.quad_count(); ++qi) {
    const auto& c = mesh.quads[qi].corners;
    for (int k = 0; k < 4; ++k) m[make_edge(c[k], c[(k + 1) % 4])].push_back(qi);
  }
  return m;
}

}  // namespace

void classify_boundary(QuadMesh& mesh) {
  if (!mesh.has_adjacency()) throw MeshError("classify_boundary: adjacency not built");
  mesh.boundary.assign(mesh.positions.size(), 0);
  for (const auto& [edge, quads] : edge_to_quads(mesh)) {
    if (quads.size() > 2)
      throw MeshError("non-manifold edge (" + std::to_string(edge.first) + ", " +
                      std::to_string(edge.second) + ") shared by " +
                      std::to_string(quads.size()) + " quads");
    if (quads.size() == 1) {
      mesh.boundary[edge.first] = 1;
      mesh.boundary[edge.second] = 1;
    }
  }
}

double signed_area_xy(const QuadMesh& mesh, const Quad& q) {
  double a = 0.0;
  for (int k = 0; k < 4; ++k) {
    const Vec3& p = mesh.positions[q.corners[k]];
    const Vec3& r = mesh.positions[q.corners[(k + 1) % 4]];
    a += p.x * r.y - r.x * p.y;
  }
  return 0.5 * a;
}

bool is_planar(const QuadMesh& mesh) {
  if (mesh.positions.empty()) return true;
  const double z0 = mesh.positions.front().z;
  return std::all_of(mesh.positions.begin(), mesh.positions.end(),
                     [z0](const Vec3& p) { return p.z == z0; });
}

namespace {

void flip_quad(Quad& q) { std::swap(q.corners[1], q.corners[3]); }

Vec3 quad_normal_sum(const QuadMesh& mesh, const Quad& q) {
  Vec3 n{};
  for (int k = 0; k < 4; ++k) {
    const Vec3& prev = mesh.positions[q.corners[(k + 3) % 4]];
    const Vec3& cur = mesh.positions[q.corners[k]];
    const Vec3& next = mesh.positions[q.corners[(k + 1) % 4]];
    n += cross(next - cur, prev - cur);
  }
  return n;
}

// Propagates consistent winding across shared edges; returns the
// component label of each quad.
std::vector<int> orient_components(QuadMesh& mesh) {
  const auto e2q = edge_to_quads(mesh);
  std::map<Edge, std::vector<int>> adj = e2q;
  std::vector<int> comp(mesh.quad_count(), -1);
  int label = 0;

  auto directed_edges = [&](int qi) {
    std::vector<std::pair<NodeId, NodeId>> out;
    const auto& c = mesh.quads[qi].corners;
    for (int k = 0; k < 4; ++k) out.emplace_back(c[k], c[(k + 1) % 4]);
    return out;
  };
  auto has_directed = [&](int qi, NodeId a, NodeId b) {
    for (auto [u, v] : directed_edges(qi))
      if (u == a && v == b) return true;
    return false;
  };

  for (int seed = 0; seed < mesh.quad_count(); ++seed) {
    if (comp[seed] >= 0) continue;
    comp[seed] = label;
    std::queue<int> frontier;
    frontier.push(seed);
    while (!frontier.empty()) {
      const int qi = frontier.front();
      frontier.pop();
      for (auto [a, b] : directed_edges(qi)) {
        for (int qj : adj.at(make_edge(a, b))) {
          if (qj == qi) continue;
          // qj must traverse the shared edge in the opposite direction
          const bool consistent = has_directed(qj, b, a);
          if (comp[qj] < 0) {
            if (!consistent) flip_quad(mesh.quads[qj]);
            comp[qj] = label;
            frontier.push(qj);
          } else if (!consistent) {
            throw MeshError("non-orientable connectivity at edge (" + std::to_string(a) +
                            ", " + std::to_string(b) + ")");
          }
        }
      }
    }
    ++label;
  }
  return comp;
}

}  // namespace

void orient_ccw(QuadMesh& mesh) {
  if (is_planar(mesh)) {
    for (Quad& q : mesh.quads)
      if (signed_area_xy(mesh, q) < 0.0) flip_quad(q);
    return;
  }
  const std::vector<int> comp = orient_components(mesh);
  const int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<double> zsum(ncomp, 0.0);
  for (int qi = 0; qi < mesh.quad_count(); ++qi)
    zsum[comp[qi]] += quad_normal_sum(mesh, mesh.quads[qi]).z;
  for (int qi = 0; qi < mesh.quad_count(); ++qi)
    if (zsum[comp[qi]] < 0.0) flip_quad(mesh.quads[qi]);
}

std::vector<Edge> unique_edges(const QuadMesh& mesh) {
  std::set<Edge> edges;
  for (const Quad& q : mesh.quads)
    for (int k = 0; k < 4; ++k)
      edges.insert(make_edge(q.corners[k], q.corners[(k + 1) % 4]));
  return {edges.begin(), edges.end()};
}

double average_edge_length(const QuadMesh& mesh) {
  if (mesh.quads.empty()) throw MeshError("average_edge_length: empty mesh");
  double total = 0.0;
  const auto edges = unique_edges(mesh);
  for (auto [a, b] : edges) total += norm(mesh.positions[b] - mesh.positions[a]);
  return total / static_cast<double>(edges.size());
}

std::vector<NodeId> edge_neighbors(const QuadMesh& mesh, NodeId node) {
  std::set<NodeId> nbrs;
  for (int qi : mesh.incident.at(node)) {
    const auto& c = mesh.quads[qi].corners;
    for (int k = 0; k < 4; ++k) {
      if (c[k] != node) continue;
      nbrs.insert(c[(k + 1) % 4]);
      nbrs.insert(c[(k + 3) % 4]);
    }
  }
  return {nbrs.begin(), nbrs.end()};
}

FanInfo fan_info(const QuadMesh& mesh, NodeId node) {
  FanInfo fan;
  fan.node = node;
  const auto& inc = mesh.incident.at(node);
  if (inc.empty()) return fan;

  // Edges at the node, each mapped to the quads using it.
  std::map<NodeId, std::vector<int>> spokes;
  for (int qi : inc) {
    const auto& c = mesh.quads[qi].corners;
    for (int k = 0; k < 4; ++k) {
      if (c[k] != node) continue;
      spokes[c[(k + 1) % 4]].push_back(qi);
      spokes[c[(k + 3) % 4]].push_back(qi);
    }
  }
  fan.closed = std::all_of(spokes.begin(), spokes.end(),
                           [](const auto& s) { return s.second.size() == 2; });

  // Walk quad-to-quad through shared spokes to order the fan.
  std::set<int> seen;
  int start = inc.front();
  if (!fan.closed) {
    for (const auto& [nbr, quads] : spokes)
      if (quads.size() == 1) {
        start = quads.front();
        break;
      }
  }
  int cur = start;
  fan.incident_quads.push_back(cur);
  seen.insert(cur);
  bool advanced = true;
  while (advanced && fan.incident_quads.size() < inc.size()) {
    advanced = false;
    for (const auto& [nbr, quads] : spokes) {
      if (quads.size() != 2) continue;
      const int a = quads[0], b = quads[1];
      if (a == cur && !seen.count(b)) {
        cur = b;
      } else if (b == cur && !seen.count(a)) {
        cur = a;
      } else {
        continue;
      }
      fan.incident_quads.push_back(cur);
      seen.insert(cur);
      advanced = true;
      break;
    }
  }
  // Disconnected leftovers (bow-tie configurations) are appended unordered.
  for (int qi : inc)
    if (!seen.count(qi)) fan.incident_quads.push_back(qi);
  return fan;
}

void finalize_mesh(QuadMesh& mesh) {
  build_adjacency(mesh);
  classify_boundary(mesh);
  orient_ccw(mesh);
}

}  // namespace tbase
