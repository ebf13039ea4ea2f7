#pragma once

#include <cstdint>

#include "tbase/mesh.hpp"
#include "tbase/surface_geometry.hpp"

namespace tbase {

struct GridSpec {
  int nx = 1, ny = 1;
  double spacing = 1.0;
  double origin_x = 0.0, origin_y = 0.0;
};

// Deterministic interior jitter. Offsets are drawn from std::mt19937_64
// raw output scaled to [0,1) with 53-bit mantissa scaling (no
// distribution objects), so identical seeds give identical meshes on
// every platform.
struct PerturbSpec {
  double magnitude = 0.3;  // fraction of the average edge length, < 0.5
  std::uint64_t seed = 0;
};

// Structured (nx+1) x (ny+1) grid of square cells, finalized (adjacency,
// boundary, CCW).
QuadMesh gen_grid(const GridSpec& spec);

// Displaces each interior node by at most magnitude * average edge
// length; boundary nodes are untouched.
void perturb(QuadMesh& mesh, const PerturbSpec& spec);

// All-quad disk mesh: a square grid of 2*rings cells per side mapped onto
// the disk with the elliptical square-to-disk blend, boundary nodes
// exactly on the circle.
QuadMesh gen_disk_mesh(double radius, int rings);

// Unstructured all-quad patch over [0, n] x [0, n]: the lattice nodes are
// jittered, triangulated with per-cell random diagonals, and each triangle
// is midpoint-subdivided into three quads. Node valences are irregular
// (3 at triangle centers, up to 8 at lattice nodes), unlike gen_grid.
// Deterministic in (n, seed); jitter is a fraction of the cell size, < 0.5.
QuadMesh gen_unstructured_patch(int n, std::uint64_t seed, double jitter = 0.25);

// gen_unstructured_patch mapped onto the disk with the same elliptical
// blend as gen_disk_mesh; boundary nodes land exactly on the circle.
QuadMesh gen_unstructured_disk(double radius, int n, std::uint64_t seed,
                               double jitter = 0.25);

// Sets every node's z to f(x, y); connectivity unchanged.
void lift_to_surface(QuadMesh& mesh, const HeightSurface& s);

}  // namespace tbase
