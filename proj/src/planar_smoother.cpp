#include "tbase/planar_smoother.hpp"

#include <algorithm>
#include <cmath>

namespace tbase {

WeightScheme WeightScheme::variant(int k) {
  switch (k) {
    case 1: return variant1();
    case 2: return variant2();
    case 3: return variant3();
    default: throw MeshError("unknown T-Base variant " + std::to_string(k));
  }
}

std::pair<Vec3, Vec3> quad_targets(const Vec3& b, const Vec3& c, const Vec3& d) {
  // Free node target in triangle (free, b, c): rotate c about b by +90deg.
  // In triangle (c, d, free): rotate c about d by -90deg.
  const Vec3 t1 = b + rot90_ccw(c - b);
  const Vec3 t2 = d + rot90_cw(c - d);
  return {Vec3{t1.x, t1.y, 0.0}, Vec3{t2.x, t2.y, 0.0}};
}

std::vector<double> weights(const std::vector<double>& lengths, double exponent,
                            double length_floor) {
  if (lengths.empty()) throw MeshError("weights: empty length list");
  std::vector<double> w(lengths.size());
  double total = 0.0;
  for (size_t i = 0; i < lengths.size(); ++i) {
    w[i] = std::pow(std::max(lengths[i], length_floor), exponent);
    total += w[i];
  }
  for (double& wi : w) wi /= total;
  return w;
}

namespace {

// Floor for length clamping: 1e-12 times the bounding-box diagonal of the
// node's one-ring.
double star_length_floor(const QuadMesh& mesh, NodeId node) {
  Vec3 lo = mesh.positions[node], hi = lo;
  for (int qi : mesh.incident[node]) {
    for (NodeId v : mesh.quads[qi].corners) {
      const Vec3& p = mesh.positions[v];
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    }
  }
  return 1e-12 * norm(hi - lo);
}

}  // namespace

Vec3 smooth_node_planar(const QuadMesh& mesh, NodeId node, WeightScheme scheme) {
  const auto& inc = mesh.incident.at(node);
  if (inc.empty()) throw MeshError("smooth_node_planar: node " + std::to_string(node) +
                                   " has no incident quads");
  std::vector<Vec3> targets;
  std::vector<double> lengths;
  targets.reserve(2 * inc.size());
  lengths.reserve(2 * inc.size());
  for (int qi : inc) {
    const auto& c = mesh.quads[qi].corners;
    int k = 0;
    while (c[k] != node) ++k;
    const Vec3& b = mesh.positions[c[(k + 1) % 4]];
    const Vec3& diag = mesh.positions[c[(k + 2) % 4]];
    const Vec3& d = mesh.positions[c[(k + 3) % 4]];
    const auto [t1, t2] = quad_targets(b, diag, d);
    targets.push_back(t1);
    lengths.push_back(norm(diag - b));
    targets.push_back(t2);
    lengths.push_back(norm(d - diag));
  }
  const auto w = weights(lengths, scheme.exponent, star_length_floor(mesh, node));
  Vec3 out{};
  for (size_t i = 0; i < targets.size(); ++i) out += w[i] * targets[i];
  return out;
}

Vec3 laplacian_node(const QuadMesh& mesh, NodeId node) {
  const auto nbrs = edge_neighbors(mesh, node);
  if (nbrs.empty())
    throw MeshError("laplacian_node: node " + std::to_string(node) + " has no neighbors");
  Vec3 sum{};
  for (NodeId v : nbrs) sum += mesh.positions[v];
  return sum / static_cast<double>(nbrs.size());
}

IterationStats smooth_planar(QuadMesh& mesh, const SmootherConfig& config) {
  if (!mesh.has_adjacency()) throw MeshError("smooth_planar: adjacency not built");
  if (mesh.boundary.size() != mesh.positions.size())
    throw MeshError("smooth_planar: boundary flags not classified");

  const double tol =
      config.tolerance > 0.0 ? config.tolerance : 1e-4 * average_edge_length(mesh);

  std::vector<NodeId> movable;
  for (NodeId v = 0; v < mesh.node_count(); ++v) {
    if (config.fix_boundary && mesh.boundary[v]) continue;
    if (!mesh.incident[v].empty()) movable.push_back(v);
  }

  auto relocate = [&](const QuadMesh& m, NodeId v) {
    Vec3 p = config.algorithm == Algorithm::Laplacian
                 ? laplacian_node(m, v)
                 : smooth_node_planar(m, v, config.scheme);
    p.z = m.positions[v].z;
    return p;
  };

  IterationStats stats;
  for (int it = 0; it < config.max_iterations; ++it) {
    double max_disp = 0.0;
    if (config.order == UpdateOrder::Simultaneous) {
      std::vector<Vec3> next(movable.size());
      for (size_t i = 0; i < movable.size(); ++i) next[i] = relocate(mesh, movable[i]);
      for (size_t i = 0; i < movable.size(); ++i) {
        max_disp = std::max(max_disp, norm(next[i] - mesh.positions[movable[i]]));
        mesh.positions[movable[i]] = next[i];
      }
    } else {
      for (NodeId v : movable) {
        const Vec3 p = relocate(mesh, v);
        max_disp = std::max(max_disp, norm(p - mesh.positions[v]));
        mesh.positions[v] = p;
      }
    }
    stats.iterations_run = it + 1;
    stats.max_displacement_history.push_back(max_disp);
    if (max_disp < tol) {
      stats.converged = true;
      break;
    }
  }
  return stats;
}

}  // namespace tbase
