#include "tbase/surface_geometry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace tbase {

HeightSurface paraboloid_surface() {
  return {[](double x, double y) { return 200.0 - 0.02 * (x * x + y * y); },
          [](double x, double y) { return std::array<double, 2>{-0.04 * x, -0.04 * y}; }};
}

HeightSurface flat_surface() {
  return {[](double, double) { return 0.0; },
          [](double, double) { return std::array<double, 2>{0.0, 0.0}; }};
}

Vec3 vertex_normal(const QuadMesh& mesh, NodeId node) {
  Vec3 acc{};
  for (int qi : mesh.incident.at(node)) {
    const auto& c = mesh.quads[qi].corners;
    Vec3 qn{};
    for (int k = 0; k < 4; ++k) {
      const Vec3& prev = mesh.positions[c[(k + 3) % 4]];
      const Vec3& cur = mesh.positions[c[k]];
      const Vec3& next = mesh.positions[c[(k + 1) % 4]];
      qn += cross(next - cur, prev - cur);
    }
    const double qn_len = norm(qn);
    if (qn_len == 0.0) continue;
    const Vec3 d1 = mesh.positions[c[2]] - mesh.positions[c[0]];
    const Vec3 d2 = mesh.positions[c[3]] - mesh.positions[c[1]];
    const double area = 0.5 * norm(cross(d1, d2));
    acc += qn * (area / qn_len);
  }
  const double len = norm(acc);
  if (len == 0.0)
    throw MeshError("vertex_normal: zero resultant at node " + std::to_string(node));
  return acc / len;
}

namespace {

constexpr double kProjectionTol = 1e-10;

}  // namespace

Vec3 project_along_normal(const Vec3& p, const Vec3& n, const HeightSurface& s,
                          double bracket) {
  auto g = [&](double t) {
    return p.z + t * n.z - s.f(p.x + t * n.x, p.y + t * n.y);
  };
  auto dg = [&](double t) {
    const auto gr = s.grad(p.x + t * n.x, p.y + t * n.y);
    return n.z - gr[0] * n.x - gr[1] * n.y;
  };
  auto at = [&](double t) { return p + n * t; };

  // Newton from t = 0, staying inside the bracket.
  double t = 0.0;
  for (int it = 0; it < 50; ++it) {
    const double gt = g(t);
    if (std::fabs(gt) < kProjectionTol) return at(t);
    const double d = dg(t);
    if (d == 0.0) break;
    t -= gt / d;
    if (std::fabs(t) > bracket) break;
  }

  // Bisection fallback: scan outward from 0 for the nearest sign change.
  const int steps = 256;
  const double h = bracket / steps;
  double lo = 0.0, hi = 0.0;
  bool found = false;
  double g0 = g(0.0);
  if (std::fabs(g0) < kProjectionTol) return p;
  for (int i = 1; i <= steps && !found; ++i) {
    for (double cand : {i * h, -i * h}) {
      const double gc = g(cand);
      if (std::fabs(gc) < kProjectionTol) return at(cand);
      if (g0 * gc < 0.0) {
        lo = cand > 0.0 ? (i - 1) * h : cand;
        hi = cand > 0.0 ? cand : -(i - 1) * h;
        found = true;
        break;
      }
    }
  }
  if (!found)
    throw MeshError("project_along_normal: no surface intersection within bracket");
  double glo = g(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (std::fabs(gm) < kProjectionTol) return at(mid);
    if (glo * gm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      glo = gm;
    }
  }
  throw MeshError("project_along_normal: root refinement did not converge");
}

double Variogram::operator()(double h) const {
  switch (kind) {
    case VariogramKind::Linear:
      return slope * h;
    case VariogramKind::Spherical: {
      if (h >= range) return sill;
      const double r = h / range;
      return sill * (1.5 * r - 0.5 * r * r * r);
    }
  }
  return slope * h;
}

KrigingModel::KrigingModel(std::vector<Vec3> samples, Variogram variogram,
                           int neighborhood)
    : samples_(std::move(samples)), variogram_(variogram), neighborhood_(neighborhood) {
  if (samples_.size() < 3) throw MeshError("kriging_fit: need at least 3 samples");
  if (neighborhood_ < 3) throw MeshError("kriging_fit: neighborhood must be >= 3");
  std::vector<std::pair<double, double>> locs;
  locs.reserve(samples_.size());
  for (const Vec3& s : samples_) locs.emplace_back(s.x, s.y);
  std::sort(locs.begin(), locs.end());
  if (std::adjacent_find(locs.begin(), locs.end()) != locs.end())
    throw MeshError("kriging_fit: duplicate sample locations");
}

double KrigingModel::predict(double x, double y) const {
  const int n = static_cast<int>(samples_.size());
  const int k = std::min(neighborhood_, n);

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto dist2 = [&](int i) {
    const double dx = samples_[i].x - x, dy = samples_[i].y - y;
    return dx * dx + dy * dy;
  };
  std::partial_sort(idx.begin(), idx.begin() + k, idx.end(),
                    [&](int a, int b) { return dist2(a) < dist2(b); });

  // Ordinary kriging system: variogram matrix, unbiasedness row of ones,
  // Lagrange multiplier in the last slot.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(k + 1, k + 1);
  Eigen::VectorXd b(k + 1);
  for (int i = 0; i < k; ++i) {
    const Vec3& si = samples_[idx[i]];
    for (int j = i + 1; j < k; ++j) {
      const Vec3& sj = samples_[idx[j]];
      const double gij = variogram_(std::hypot(si.x - sj.x, si.y - sj.y));
      A(i, j) = gij;
      A(j, i) = gij;
    }
    A(i, k) = 1.0;
    A(k, i) = 1.0;
    b(i) = variogram_(std::hypot(si.x - x, si.y - y));
  }
  b(k) = 1.0;

  auto solve = [&](const Eigen::MatrixXd& M) -> Eigen::VectorXd {
    return M.partialPivLu().solve(b);
  };
  Eigen::VectorXd w = solve(A);
  if (!w.allFinite() || (A * w - b).norm() > 1e-6 * (1.0 + b.norm())) {
    Eigen::MatrixXd Aj = A;
    for (int i = 0; i < k; ++i) Aj(i, i) += 1e-10;
    w = solve(Aj);
    if (!w.allFinite() || (Aj * w - b).norm() > 1e-6 * (1.0 + b.norm()))
      throw MeshError("kriging_predict: singular kriging system");
  }

  double z = 0.0;
  for (int i = 0; i < k; ++i) z += w(i) * samples_[idx[i]].z;
  return z;
}

}  // namespace tbase
