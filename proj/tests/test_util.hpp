#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "tbase/mesh.hpp"

namespace tbase::testutil {

inline double urand(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline Vec3 random_point(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  return {urand(rng, lo, hi), urand(rng, lo, hi), urand(rng, lo, hi)};
}

// Closed fan around node 0: ring of 2*valence nodes alternating
// edge-neighbors and diagonal nodes, one quad per edge-neighbor pair.
// Edge neighbors are the even ring slots.
struct Fan {
  QuadMesh mesh;
  std::vector<NodeId> edge_nbrs;
};

inline Fan make_closed_fan(int valence, std::mt19937_64& rng) {
  Fan fan;
  fan.mesh.positions.push_back({urand(rng, -0.2, 0.2), urand(rng, -0.2, 0.2), 0.0});
  const int ring = 2 * valence;
  std::vector<double> angles(ring);
  for (int i = 0; i < ring; ++i)
    angles[i] = 2.0 * M_PI * (i + urand(rng, 0.05, 0.45)) / ring;
  for (int i = 0; i < ring; ++i) {
    const double r = urand(rng, 0.8, 1.6);
    fan.mesh.positions.push_back({r * std::cos(angles[i]), r * std::sin(angles[i]), 0.0});
    if (i % 2 == 0) fan.edge_nbrs.push_back(i + 1);
  }
  for (int k = 0; k < valence; ++k) {
    const NodeId e0 = 1 + 2 * k;
    const NodeId d = 1 + 2 * k + 1;
    const NodeId e1 = 1 + (2 * k + 2) % ring;
    fan.mesh.quads.push_back({{0, e0, d, e1}});
  }
  finalize_mesh(fan.mesh);
  return fan;
}

// Rotation about z by angle, plus translation and uniform scale.
struct Similarity {
  double angle = 0.0, scale = 1.0;
  Vec3 shift{};

  Vec3 operator()(const Vec3& p) const {
    const double c = std::cos(angle), s = std::sin(angle);
    return Vec3{c * p.x - s * p.y, s * p.x + c * p.y, p.z} * scale + shift;
  }
};

inline void apply(QuadMesh& mesh, const Similarity& t) {
  for (Vec3& p : mesh.positions) p = t(p);
}

// General 3D rotation from three angles.
struct Rotation {
  double ax = 0.0, ay = 0.0, az = 0.0;

  Vec3 operator()(const Vec3& p) const {
    Vec3 q = p;
    auto rot = [](double a, double& u, double& v) {
      const double c = std::cos(a), s = std::sin(a);
      const double nu = c * u - s * v, nv = s * u + c * v;
      u = nu;
      v = nv;
    };
    rot(ax, q.y, q.z);
    rot(ay, q.z, q.x);
    rot(az, q.x, q.y);
    return q;
  }
};

}  // namespace tbase::testutil
