#include "tbase/meshgen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace tbase {

QuadMesh gen_grid(const GridSpec& spec) {
  if (spec.nx < 1 || spec.ny < 1 || spec.spacing <= 0.0)
    throw MeshError("gen_grid: invalid spec");
  QuadMesh mesh;
  for (int j = 0; j <= spec.ny; ++j)
    for (int i = 0; i <= spec.nx; ++i)
      mesh.positions.emplace_back(spec.origin_x + i * spec.spacing,
                                  spec.origin_y + j * spec.spacing, 0.0);
  auto id = [&](int i, int j) { return j * (spec.nx + 1) + i; };
  for (int j = 0; j < spec.ny; ++j)
    for (int i = 0; i < spec.nx; ++i)
      mesh.quads.push_back({{id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)}});
  finalize_mesh(mesh);
  return mesh;
}

namespace {

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void perturb(QuadMesh& mesh, const PerturbSpec& spec) {
  if (!is_planar(mesh)) throw MeshError("perturb: mesh must be planar");
  if (spec.magnitude < 0.0 || spec.magnitude >= 0.5)
    throw MeshError("perturb: magnitude must be in [0, 0.5)");
  if (mesh.boundary.size() != mesh.positions.size())
    throw MeshError("perturb: boundary flags not classified");
  const double spacing = average_edge_length(mesh);
  std::mt19937_64 rng(spec.seed);
  for (NodeId v = 0; v < mesh.node_count(); ++v) {
    if (mesh.boundary[v]) continue;
    const double r = spec.magnitude * spacing * std::sqrt(unit_double(rng));
    const double theta = 2.0 * M_PI * unit_double(rng);
    mesh.positions[v].x += r * std::cos(theta);
    mesh.positions[v].y += r * std::sin(theta);
  }
}

QuadMesh gen_disk_mesh(double radius, int rings) {
  if (radius <= 0.0 || rings < 2) throw MeshError("gen_disk_mesh: invalid spec");
  const int n = 2 * rings;
  QuadMesh mesh;
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      const double x = -1.0 + 2.0 * i / n;
      const double y = -1.0 + 2.0 * j / n;
      // Elliptical square-to-disk map; |p| = 1 on the square outline.
      mesh.positions.emplace_back(radius * x * std::sqrt(1.0 - 0.5 * y * y),
                                  radius * y * std::sqrt(1.0 - 0.5 * x * x), 0.0);
    }
  }
  auto id = [&](int i, int j) { return j * (n + 1) + i; };
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      mesh.quads.push_back({{id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)}});
  finalize_mesh(mesh);
  return mesh;
}

QuadMesh gen_unstructured_patch(int n, std::uint64_t seed, double jitter) {
  if (n < 2) throw MeshError("gen_unstructured_patch: n must be >= 2");
  if (jitter < 0.0 || jitter >= 0.5)
    throw MeshError("gen_unstructured_patch: jitter must be in [0, 0.5)");
  std::mt19937_64 rng(seed);
  std::vector<Vec3> lattice((n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      const double jx =
          (i > 0 && i < n) ? jitter * (2.0 * unit_double(rng) - 1.0) : 0.0;
      const double jy =
          (j > 0 && j < n) ? jitter * (2.0 * unit_double(rng) - 1.0) : 0.0;
      lattice[j * (n + 1) + i] = {i + jx, j + jy, 0.0};
    }
  }
  struct Tri {
    int a, b, c;
  };
  std::vector<Tri> tris;
  auto id = [&](int i, int j) { return j * (n + 1) + i; };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int p = id(i, j), q = id(i + 1, j);
      const int r = id(i + 1, j + 1), s = id(i, j + 1);
      if (rng() & 1) {
        tris.push_back({p, q, r});
        tris.push_back({p, r, s});
      } else {
        tris.push_back({p, q, s});
        tris.push_back({q, r, s});
      }
    }
  }
  QuadMesh mesh;
  mesh.positions = lattice;
  std::map<std::pair<int, int>, int> midpoints;
  auto midpoint = [&](int a, int b) {
    const auto key = std::minmax(a, b);
    const auto it = midpoints.find(key);
    if (it != midpoints.end()) return it->second;
    const int idx = static_cast<int>(mesh.positions.size());
    mesh.positions.push_back((lattice[a] + lattice[b]) * 0.5);
    midpoints[key] = idx;
    return idx;
  };
  for (const Tri& t : tris) {
    const int mab = midpoint(t.a, t.b);
    const int mbc = midpoint(t.b, t.c);
    const int mca = midpoint(t.c, t.a);
    const int ctr = static_cast<int>(mesh.positions.size());
    mesh.positions.push_back((lattice[t.a] + lattice[t.b] + lattice[t.c]) / 3.0);
    mesh.quads.push_back({{t.a, mab, ctr, mca}});
    mesh.quads.push_back({{t.b, mbc, ctr, mab}});
    mesh.quads.push_back({{t.c, mca, ctr, mbc}});
  }
  finalize_mesh(mesh);
  return mesh;
}

QuadMesh gen_unstructured_disk(double radius, int n, std::uint64_t seed,
                               double jitter) {
  if (radius <= 0.0) throw MeshError("gen_unstructured_disk: invalid radius");
  QuadMesh mesh = gen_unstructured_patch(n, seed, jitter);
  for (Vec3& p : mesh.positions) {
    const double x = 2.0 * p.x / n - 1.0;
    const double y = 2.0 * p.y / n - 1.0;
    p = {radius * x * std::sqrt(1.0 - 0.5 * y * y),
         radius * y * std::sqrt(1.0 - 0.5 * x * x), 0.0};
  }
  orient_ccw(mesh);
  return mesh;
}

void lift_to_surface(QuadMesh& mesh, const HeightSurface& s) {
  for (Vec3& p : mesh.positions) p.z = s.f(p.x, p.y);
}

}  // namespace tbase
