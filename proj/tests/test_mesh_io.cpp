#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "tbase/mesh_io.hpp"
#include "tbase/meshgen.hpp"

using namespace tbase;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("io_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("write/read round-trip is exact") {
  QuadMesh mesh = gen_grid({9, 7, 0.37, -1.0, 2.0});
  perturb(mesh, {0.3, 555});
  TempFile f("roundtrip.obj");
  write_mesh(f.path, mesh);
  const QuadMesh back = read_mesh(f.path);
  REQUIRE(back.node_count() == mesh.node_count());
  REQUIRE(back.quad_count() == mesh.quad_count());
  for (int i = 0; i < mesh.node_count(); ++i)
    CHECK(back.positions[i] == mesh.positions[i]);
  for (int q = 0; q < mesh.quad_count(); ++q)
    CHECK(back.quads[q].corners == mesh.quads[q].corners);
  CHECK(back.boundary == mesh.boundary);
}

TEST_CASE("reader accepts comments, rejects junk") {
  TempFile f("junk.obj");
  {
    std::ofstream out(f.path);
    out << "# comment\nv 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nf 1 2 3 4\n";
  }
  CHECK_NOTHROW(read_mesh(f.path));
  {
    std::ofstream out(f.path);
    out << "v 0 0 0\nv 1 0 0\nv 1 1 0\nf 1 2 3\n";  // triangle face
  }
  CHECK_THROWS_AS(read_mesh(f.path), MeshError);
  CHECK_THROWS_AS(read_mesh("does_not_exist.obj"), MeshError);
}

TEST_CASE("sidecar stores the surface tag") {
  QuadMesh mesh = gen_grid({2, 2, 1.0});
  TempFile f("sidecar.json");
  write_sidecar(f.path, mesh, "paraboloid");
  CHECK(read_sidecar_surface_tag(f.path) == "paraboloid");
}

TEST_CASE("xyz csv round-trip") {
  const std::vector<Vec3> pts = {{0.1, 0.2, 0.3}, {-4, 5, 6.5}, {7, -8, 9}};
  TempFile f("pts.csv");
  write_xyz_csv(f.path, pts);
  const auto back = read_xyz_csv(f.path);  // header is skipped
  REQUIRE(back.size() == pts.size());
  for (size_t i = 0; i < pts.size(); ++i) CHECK(back[i] == pts[i]);
}
