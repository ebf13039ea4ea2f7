#include "tbase/quality.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace tbase {

namespace {

bool any_three_collinear(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return collinear(a, b, c) || collinear(b, c, d) || collinear(c, d, a) ||
         collinear(d, a, b);
}

}  // namespace

double lambda_quality(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  if (any_three_collinear(a, b, c, d)) return 0.0;
  const Vec3 p[4] = {a, b, c, d};
  double num = 1.0, den = 1.0;
  for (int i = 0; i < 4; ++i) {
    const Vec3 e1 = p[(i + 1) % 4] - p[i];
    const Vec3 e2 = p[(i + 3) % 4] - p[i];
    num *= norm(cross(e1, e2));
    den *= norm2(e1) + norm2(e2);
  }
  // num/den <= 1/16 by AM-GM, so the result stays in [0, 1].
  return std::min(1.0, 2.0 * std::pow(num / den, 0.25));
}

double gamma_quality(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  if (any_three_collinear(a, b, c, d)) return 0.0;
  const Vec3 p[4] = {a, b, c, d};
  double sum = 0.0;
  for (int t = 0; t < 4; ++t) {
    // Triangles ABC, BCD, CDA, DAB in turn.
    const Vec3& ta = p[t];
    const Vec3& tb = p[(t + 1) % 4];
    const Vec3& tc = p[(t + 2) % 4];
    const Vec3 n = cross(tb - ta, tc - ta);
    const double n2 = norm2(n);
    if (n2 == 0.0) continue;  // degenerate triangle contributes 0
    Vec3 proj[4];
    for (int i = 0; i < 4; ++i) {
      const Vec3 r = p[i] - ta;
      proj[i] = p[i] - n * (dot(r, n) / n2);
    }
    sum += lambda_quality(proj[0], proj[1], proj[2], proj[3]);
  }
  return sum / 4.0;
}

QualityReport mesh_quality_report(const QuadMesh& mesh, Metric metric) {
  if (mesh.quads.empty()) throw MeshError("mesh_quality_report: empty mesh");
  QualityReport rep;
  rep.per_element.reserve(mesh.quads.size());
  for (const Quad& q : mesh.quads) {
    const Vec3& a = mesh.positions[q.corners[0]];
    const Vec3& b = mesh.positions[q.corners[1]];
    const Vec3& c = mesh.positions[q.corners[2]];
    const Vec3& d = mesh.positions[q.corners[3]];
    const double v = metric == Metric::Lambda ? lambda_quality(a, b, c, d)
                                              : gamma_quality(a, b, c, d);
    rep.per_element.push_back(v);
    rep.histogram[std::min<int>(4, static_cast<int>(std::floor(v / 0.2)))] += 1;
    if (signed_area_xy(mesh, q) < 0.0) rep.inverted += 1;
  }
  const double n = static_cast<double>(rep.per_element.size());
  for (double v : rep.per_element) rep.mq += v;
  rep.mq /= n;
  double ss = 0.0;
  for (double v : rep.per_element) ss += (v - rep.mq) * (v - rep.mq);
  rep.mse = std::sqrt(ss / n);
  return rep;
}

std::array<double, 5> QualityReport::percentages() const {
  std::array<double, 5> pct{};
  const double n = static_cast<double>(per_element.size());
  if (n == 0.0) return pct;
  for (int i = 0; i < 5; ++i) pct[i] = 100.0 * histogram[i] / n;
  return pct;
}

std::string QualityReport::csv_header() {
  return "label,bin_0.0_0.2,bin_0.2_0.4,bin_0.4_0.6,bin_0.6_0.8,bin_0.8_1.0,MQ,MSE,inverted";
}

std::string QualityReport::to_csv_row(const std::string& label) const {
  const auto pct = percentages();
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s,%.4f,%.4f,%.4f,%.4f,%.4f,%.6f,%.6f,%d",
                label.c_str(), pct[0], pct[1], pct[2], pct[3], pct[4], mq, mse,
                inverted);
  return buf;
}

std::string QualityReport::to_table(const std::string& label) const {
  const auto pct = percentages();
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "%-10s  0.0~0.2  0.2~0.4  0.4~0.6  0.6~0.8  0.8~1.0      MQ     MSE  inverted\n"
                "%-10s  %6.2f%%  %6.2f%%  %6.2f%%  %6.2f%%  %6.2f%%  %6.4f  %6.4f  %8d\n",
                "", label.c_str(), pct[0], pct[1], pct[2], pct[3], pct[4], mq, mse,
                inverted);
  return buf;
}

}  // namespace tbase
