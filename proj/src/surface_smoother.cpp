#include "tbase/surface_smoother.hpp"

#include <algorithm>
#include <cmath>

namespace tbase {

LocalFrame local_frame(const Vec3& p, const Vec3& q, const Vec3& r) {
  if (collinear(p, q, r)) throw MeshError("local_frame: collinear points");
  LocalFrame fr;
  fr.origin = q;
  fr.u = normalized(r - q);
  fr.n = normalized(cross(q - p, r - p));
  fr.v = cross(fr.n, fr.u);
  return fr;
}

std::optional<Vec3> tbase_target_3d(const Vec3& a, const Vec3& b, const Vec3& c) {
  if (collinear(a, b, c)) return std::nullopt;
  // Equivalent to applying the planar target formula in the local frame of
  // triangle (a, b, c): rotate c about b by +90deg within the plane, on the
  // free node's side of edge bc.
  const Vec3 n = normalized(cross(b - a, c - a));
  return b + cross(n, c - b);
}

namespace {

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

Vec3 smooth_node_surface(const QuadMesh& mesh, NodeId node, WeightScheme scheme) {
  const auto& inc = mesh.incident.at(node);
  if (inc.empty())
    throw MeshError("smooth_node_surface: node " + std::to_string(node) +
                    " has no incident quads");
  const Vec3& a = mesh.positions[node];
  std::vector<Vec3> targets;
  std::vector<double> lengths;
  for (int qi : inc) {
    const auto& c = mesh.quads[qi].corners;
    int k = 0;
    while (c[k] != node) ++k;
    const Vec3& b = mesh.positions[c[(k + 1) % 4]];
    const Vec3& diag = mesh.positions[c[(k + 2) % 4]];
    const Vec3& d = mesh.positions[c[(k + 3) % 4]];
    if (auto t1 = tbase_target_3d(a, b, diag)) {
      targets.push_back(*t1);
      lengths.push_back(norm(diag - b));
    }
    if (auto t2 = tbase_target_3d(a, d, diag)) {
      targets.push_back(*t2);
      lengths.push_back(norm(d - diag));
    }
  }
  if (targets.empty())
    throw MeshError("smooth_node_surface: all virtual triangles at node " +
                    std::to_string(node) + " are degenerate");
  const auto w = weights(lengths, scheme.exponent, star_length_floor(mesh, node));
  Vec3 out{};
  for (size_t i = 0; i < targets.size(); ++i) out += w[i] * targets[i];
  return out;
}

IterationStats smooth_surface(QuadMesh& mesh, const SurfaceBinding& binding,
                              const SmootherConfig& config) {
  if (!mesh.has_adjacency()) throw MeshError("smooth_surface: adjacency not built");
  if (mesh.boundary.size() != mesh.positions.size())
    throw MeshError("smooth_surface: boundary flags not classified");

  const double avg_edge = average_edge_length(mesh);
  const double tol = config.tolerance > 0.0 ? config.tolerance : 1e-4 * avg_edge;
  const double bracket = 10.0 * avg_edge;

  std::vector<NodeId> movable;
  for (NodeId v = 0; v < mesh.node_count(); ++v) {
    if (config.fix_boundary && mesh.boundary[v]) continue;
    if (!mesh.incident[v].empty()) movable.push_back(v);
  }

  auto relocate = [&](const QuadMesh& m, NodeId v) {
    return config.algorithm == Algorithm::Laplacian
               ? laplacian_node(m, v)
               : smooth_node_surface(m, v, config.scheme);
  };
  auto constrain = [&](const QuadMesh& m, NodeId v, const Vec3& smoothed) {
    if (binding.kind == SurfaceBinding::Kind::ParametricHeight) {
      const Vec3 n = vertex_normal(m, v);
      try {
        return project_along_normal(smoothed, n, binding.surface, bracket);
      } catch (const MeshError& e) {
        throw MeshError("projection failed at node " + std::to_string(v) + ": " +
                        e.what());
      }
    }
    // Interpolated surface: x, y stay, z is re-interpolated.
    return Vec3{smoothed.x, smoothed.y, binding.kriging->predict(smoothed.x, smoothed.y)};
  };

  IterationStats stats;
  for (int it = 0; it < config.max_iterations; ++it) {
    double max_disp = 0.0;
    if (config.order == UpdateOrder::Simultaneous) {
      std::vector<Vec3> next(movable.size());
      for (size_t i = 0; i < movable.size(); ++i)
        next[i] = constrain(mesh, movable[i], relocate(mesh, movable[i]));
      for (size_t i = 0; i < movable.size(); ++i) {
        max_disp = std::max(max_disp, norm(next[i] - mesh.positions[movable[i]]));
        mesh.positions[movable[i]] = next[i];
      }
    } else {
      for (NodeId v : movable) {
        const Vec3 p = constrain(mesh, v, relocate(mesh, v));
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

int laplacian_iteration_count(const QuadMesh& mesh, const SurfaceBinding& binding,
                              SmootherConfig config) {
  QuadMesh copy = mesh;
  config.algorithm = Algorithm::Laplacian;
  const IterationStats stats = smooth_surface(copy, binding, config);
  return stats.iterations_run;
}

}  // namespace tbase
