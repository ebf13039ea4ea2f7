#pragma once

#include <memory>
#include <optional>

#include "tbase/planar_smoother.hpp"
#include "tbase/surface_geometry.hpp"

namespace tbase {

// Orthonormal frame of a triangle plane. Local coordinates of the three
// defining points keep their pairwise 3D distances.
struct LocalFrame {
  Vec3 origin, u, v, n;

  std::array<double, 2> to_local(const Vec3& x) const {
    const Vec3 r = x - origin;
    return {dot(r, u), dot(r, v)};
  }
  Vec3 to_global(double lu, double lv) const { return origin + u * lu + v * lv; }
};

// Frame of triangle (p, q, r): origin q, u along r - q, normal from the
// CCW orientation p, q, r. Throws on collinear input.
LocalFrame local_frame(const Vec3& p, const Vec3& q, const Vec3& r);

// Target position of free node a making triangle (a, b, c) an isosceles
// right triangle with the right angle on edge bc, in the triangle's own
// plane. Returns nullopt (skip signal) on collinear input.
std::optional<Vec3> tbase_target_3d(const Vec3& a, const Vec3& b, const Vec3& c);

// Surface the mesh is bound to: either an analytic height function
// (projection update) or a kriging interpolant (z re-interpolation).
struct SurfaceBinding {
  enum class Kind { ParametricHeight, InterpolatedHeight };
  Kind kind = Kind::ParametricHeight;
  HeightSurface surface;
  std::shared_ptr<const KrigingModel> kriging;

  static SurfaceBinding parametric(HeightSurface s) {
    SurfaceBinding b;
    b.kind = Kind::ParametricHeight;
    b.surface = std::move(s);
    return b;
  }
  static SurfaceBinding interpolated(KrigingModel model) {
    SurfaceBinding b;
    b.kind = Kind::InterpolatedHeight;
    b.kriging = std::make_shared<KrigingModel>(std::move(model));
    return b;
  }
};

// Weighted T-Base relocation in 3D: two per-quad targets computed in the
// local frame of each virtual triangle, degenerate triangles skipped with
// weight renormalization.
Vec3 smooth_node_surface(const QuadMesh& mesh, NodeId node, WeightScheme scheme);

// Iterative surface smoothing: relocation followed by the binding's
// surface-preserving update (normal projection or z re-interpolation).
IterationStats smooth_surface(QuadMesh& mesh, const SurfaceBinding& binding,
                              const SmootherConfig& config);

// Runs the Laplacian baseline to convergence on a copy and returns its
// iteration count, for use as the T-Base iteration cap.
int laplacian_iteration_count(const QuadMesh& mesh, const SurfaceBinding& binding,
                              SmootherConfig config);

}  // namespace tbase
