#pragma once

#include <functional>
#include <vector>

#include "tbase/mesh.hpp"

namespace tbase {

// Height-function surface z = f(x, y) with analytic gradient.
struct HeightSurface {
  std::function<double(double, double)> f;
  std::function<std::array<double, 2>(double, double)> grad;
};

// z = 200 - 0.02 (x^2 + y^2)
HeightSurface paraboloid_surface();

// z = 0
HeightSurface flat_surface();

// Area-weighted average of incident quad normals, unit length. Each quad
// normal is the normalized sum of its four corner-triangle normals.
Vec3 vertex_normal(const QuadMesh& mesh, NodeId node);

// Moves p along the unit direction n onto z = f(x, y): finds the root of
// g(t) = p_z + t n_z - f(p_x + t n_x, p_y + t n_y) nearest 0 within
// |t| <= bracket, by Newton steps with a bisection fallback, to |g| < 1e-10.
// Throws MeshError when no root is found inside the bracket.
Vec3 project_along_normal(const Vec3& p, const Vec3& n, const HeightSurface& s,
                          double bracket);

enum class VariogramKind { Linear, Spherical };

struct Variogram {
  VariogramKind kind = VariogramKind::Linear;
  double slope = 1.0;             // linear
  double sill = 1.0, range = 1.0; // spherical

  double operator()(double h) const;
};

// Ordinary kriging over the k nearest samples with an unbiasedness
// constraint; exact at sample locations.
class KrigingModel {
 public:
  KrigingModel(std::vector<Vec3> samples, Variogram variogram = {},
               int neighborhood = 16);

  double predict(double x, double y) const;

  const std::vector<Vec3>& samples() const { return samples_; }

 private:
  std::vector<Vec3> samples_;
  Variogram variogram_;
  int neighborhood_;
};

inline KrigingModel kriging_fit(std::vector<Vec3> samples, Variogram v = {},
                                int neighborhood = 16) {
  return KrigingModel(std::move(samples), v, neighborhood);
}

inline double kriging_predict(const KrigingModel& m, double x, double y) {
  return m.predict(x, y);
}

}  // namespace tbase
