#pragma once

#include <array>
#include <string>
#include <vector>

#include "tbase/mesh.hpp"

namespace tbase {

enum class Metric { Lambda, Gamma };

// Planar shape quality in [0, 1]: 1 for a square, 0 when any three of the
// four corners are collinear.
double lambda_quality(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

// Warpage-aware quality: mean of lambda over the four per-corner-triangle
// planar projections of the quad. Equals lambda for coplanar quads.
double gamma_quality(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

// Per-mesh quality statistics with a five-bin histogram over
// [0,0.2) [0.2,0.4) [0.4,0.6) [0.6,0.8) [0.8,1.0]; the last bin is
// closed at 1.0.
struct QualityReport {
  std::vector<double> per_element;
  double mq = 0.0;
  double mse = 0.0;
  std::array<int, 5> histogram{};
  int inverted = 0;  // planar elements with negative signed area (diagnostic)

  std::array<double, 5> percentages() const;
  std::string to_table(const std::string& label = "") const;
  std::string to_csv_row(const std::string& label) const;
  static std::string csv_header();
};

QualityReport mesh_quality_report(const QuadMesh& mesh, Metric metric);

}  // namespace tbase
