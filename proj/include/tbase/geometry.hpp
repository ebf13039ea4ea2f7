#pragma once

#include <cmath>

namespace tbase {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3() = default;
  Vec3(double x_, double y_, double z_ = 0.0) : x(x_), y(y_), z(z_) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  return v / n;
}

// In-plane rotations about +z, used by the planar target formulas.
inline Vec3 rot90_ccw(const Vec3& v) { return {-v.y, v.x, v.z}; }
inline Vec3 rot90_cw(const Vec3& v) { return {v.y, -v.x, v.z}; }

inline double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  return 0.5 * norm(cross(b - a, c - a));
}

// Scale-free collinearity test: area below 1e-12 times the squared
// bounding-box diagonal of the three points.
inline bool collinear(const Vec3& a, const Vec3& b, const Vec3& c) {
  const double lo_x = std::fmin(a.x, std::fmin(b.x, c.x));
  const double hi_x = std::fmax(a.x, std::fmax(b.x, c.x));
  const double lo_y = std::fmin(a.y, std::fmin(b.y, c.y));
  const double hi_y = std::fmax(a.y, std::fmax(b.y, c.y));
  const double lo_z = std::fmin(a.z, std::fmin(b.z, c.z));
  const double hi_z = std::fmax(a.z, std::fmax(b.z, c.z));
  const double dx = hi_x - lo_x, dy = hi_y - lo_y, dz = hi_z - lo_z;
  const double diag2 = dx * dx + dy * dy + dz * dz;
  return triangle_area(a, b, c) < 1e-12 * diag2 || diag2 == 0.0;
}

}  // namespace tbase
