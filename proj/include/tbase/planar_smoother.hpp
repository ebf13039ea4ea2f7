#pragma once

#include <utility>
#include <vector>

#include "tbase/mesh.hpp"

namespace tbase {

// Length-exponent p of the weighting, Eqs. of the three variants:
// p = 0 averages all targets, p = -1/2 and p = -1 favour short edges.
struct WeightScheme {
  double exponent = 0.0;

  static WeightScheme variant1() { return {0.0}; }
  static WeightScheme variant2() { return {-0.5}; }
  static WeightScheme variant3() { return {-1.0}; }
  static WeightScheme variant(int k);
};

enum class Algorithm { Laplacian, TBase };
enum class UpdateOrder { Simultaneous, Sequential };

struct SmootherConfig {
  Algorithm algorithm = Algorithm::TBase;
  WeightScheme scheme = WeightScheme::variant1();
  // Absolute displacement tolerance; values <= 0 default to
  // 1e-4 * average edge length of the input mesh.
  double tolerance = 0.0;
  int max_iterations = 500;
  UpdateOrder order = UpdateOrder::Simultaneous;
  bool fix_boundary = true;
};

struct IterationStats {
  int iterations_run = 0;
  std::vector<double> max_displacement_history;
  bool converged = false;
};

// Target positions of the free node that make triangles (free, b, c) and
// (c, d, free) isosceles right triangles, for a CCW quad. The free node's
// own position does not enter the formula.
std::pair<Vec3, Vec3> quad_targets(const Vec3& b, const Vec3& c, const Vec3& d);

// Normalized weights l_i^p / sum l_j^p. Lengths are clamped to
// `length_floor` before applying a negative exponent.
std::vector<double> weights(const std::vector<double>& lengths, double exponent,
                            double length_floor = 0.0);

// One T-Base relocation of an interior node: weighted sum of the two
// per-quad targets over all incident quads.
Vec3 smooth_node_planar(const QuadMesh& mesh, NodeId node, WeightScheme scheme);

// Centroid of the edge-connected neighbors.
Vec3 laplacian_node(const QuadMesh& mesh, NodeId node);

// Iterates node relocation over all movable nodes until the max
// displacement drops below tolerance or the iteration cap is hit.
IterationStats smooth_planar(QuadMesh& mesh, const SmootherConfig& config);

}  // namespace tbase
