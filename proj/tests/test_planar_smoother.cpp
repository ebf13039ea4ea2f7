#include <doctest.h>

#include <cmath>

#include "tbase/meshgen.hpp"
#include "tbase/planar_smoother.hpp"
#include "tbase/quality.hpp"
#include "test_util.hpp"

using namespace tbase;
using testutil::urand;

TEST_CASE("quad targets") {
  // unit square is its own target
  auto [t1, t2] = quad_targets({1, 0}, {1, 1}, {0, 1});
  CHECK(norm(t1 - Vec3{0, 0}) < 1e-15);
  CHECK(norm(t2 - Vec3{0, 0}) < 1e-15);

  auto [s1, s2] = quad_targets({1, 0}, {2, 1}, {0, 1});
  CHECK(norm(s1 - Vec3{0, 1}) < 1e-15);

  // translation moves both outputs by the same amount
  const Vec3 shift{3.5, -2.25};
  auto [u1, u2] = quad_targets(Vec3{1, 0} + shift, Vec3{2, 1} + shift, Vec3{0, 1} + shift);
  CHECK(norm(u1 - (s1 + shift)) < 1e-12);
  CHECK(norm(u2 - (s2 + shift)) < 1e-12);

  // degenerate b == c collapses the first target onto b
  auto [d1, d2] = quad_targets({1, 0}, {1, 0}, {0, 1});
  CHECK(norm(d1 - Vec3{1, 0}) < 1e-15);
}

TEST_CASE("weights") {
  const auto w0 = weights({3.0, 0.5, 7.0, 2.0}, 0.0);
  for (double w : w0) CHECK(w == 0.25);

  const auto w2 = weights({1, 1, 4, 4}, -0.5);
  CHECK(w2[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(w2[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(w2[2] == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(w2[3] == doctest::Approx(1.0 / 6.0).epsilon(1e-14));

  const auto w3 = weights({1, 2}, -1.0);
  CHECK(w3[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(w3[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  CHECK_THROWS_AS(weights({}, 0.0), MeshError);
}

TEST_CASE("weight normalization on random lengths") {
  std::mt19937_64 rng(31);
  for (double p : {0.0, -0.5, -1.0}) {
    for (int i = 0; i < 100; ++i) {
      std::vector<double> lengths(2 + (rng() % 12));
      for (double& l : lengths) l = urand(rng, 1e-3, 100.0);
      const auto w = weights(lengths, p);
      double sum = 0.0;
      for (double wi : w) sum += wi;
      CHECK(std::fabs(sum - 1.0) < 1e-14);
    }
  }
}

TEST_CASE("center of a perfect grid is a fixed point of every scheme") {
  const QuadMesh grid = gen_grid({2, 2, 1.0});
  for (int v = 1; v <= 3; ++v) {
    const Vec3 p = smooth_node_planar(grid, 4, WeightScheme::variant(v));
    CHECK(norm(p - grid.positions[4]) < 1e-14);
  }
  CHECK(norm(laplacian_node(grid, 4) - grid.positions[4]) < 1e-14);
}

TEST_CASE("displaced center under variant 1 returns to the neighbor mean") {
  QuadMesh grid = gen_grid({2, 2, 1.0});
  const Vec3 undisplaced = grid.positions[4];
  grid.positions[4] += {0.1, 0.1};
  const Vec3 p = smooth_node_planar(grid, 4, WeightScheme::variant1());
  CHECK(norm(p - undisplaced) < 1e-14);
  CHECK(norm(laplacian_node(grid, 4) - undisplaced) < 1e-14);
}

TEST_CASE("closed-fan equivalence: variant 1 equals the laplacian update") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const int valence = 3 + static_cast<int>(rng() % 6);
    auto fan = testutil::make_closed_fan(valence, rng);
    const Vec3 tbase = smooth_node_planar(fan.mesh, 0, WeightScheme::variant1());
    Vec3 centroid{};
    for (NodeId v : fan.edge_nbrs) centroid += fan.mesh.positions[v];
    centroid = centroid / static_cast<double>(fan.edge_nbrs.size());
    CHECK(norm(tbase - centroid) < 1e-12);
    CHECK(norm(laplacian_node(fan.mesh, 0) - centroid) < 1e-12);
  }
}

TEST_CASE("scale equivariance of the node update") {
  std::mt19937_64 rng(55);
  auto fan = testutil::make_closed_fan(4, rng);
  for (int v = 1; v <= 3; ++v) {
    const Vec3 base = smooth_node_planar(fan.mesh, 0, WeightScheme::variant(v));
    QuadMesh scaled = fan.mesh;
    for (Vec3& p : scaled.positions) p *= 3.0;
    const Vec3 out = smooth_node_planar(scaled, 0, WeightScheme::variant(v));
    CHECK(norm(out - base * 3.0) < 1e-12);
  }
}

TEST_CASE("perfect grid converges in one iteration") {
  for (Algorithm algo : {Algorithm::Laplacian, Algorithm::TBase}) {
    QuadMesh grid = gen_grid({10, 10, 1.0});
    SmootherConfig cfg;
    cfg.algorithm = algo;
    const IterationStats st = smooth_planar(grid, cfg);
    CHECK(st.converged);
    CHECK(st.iterations_run == 1);
    CHECK(st.max_displacement_history[0] < 1e-12);
  }
}

TEST_CASE("perturbed grid converges and improves quality") {
  for (int v = 1; v <= 3; ++v) {
    QuadMesh mesh = gen_grid({10, 10, 1.0});
    perturb(mesh, {0.3, 2024});
    const double mq_before = mesh_quality_report(mesh, Metric::Lambda).mq;
    SmootherConfig cfg;
    cfg.scheme = WeightScheme::variant(v);
    const IterationStats st = smooth_planar(mesh, cfg);
    CHECK(st.converged);
    CHECK(mesh_quality_report(mesh, Metric::Lambda).mq > mq_before);
    // boundary stayed put
    CHECK(mesh.positions[0] == Vec3{0, 0, 0});
    CHECK(mesh.positions[10] == Vec3{10, 0, 0});
  }
}

TEST_CASE("iteration counts trend upward from variant 1 to 3") {
  // expected trend on the fixed-seed corpus, not a hard law
  int iters[4] = {0, 0, 0, 0};
  for (int v = 1; v <= 3; ++v) {
    QuadMesh mesh = gen_grid({10, 10, 1.0});
    perturb(mesh, {0.3, 2024});
    SmootherConfig cfg;
    cfg.scheme = WeightScheme::variant(v);
    iters[v] = smooth_planar(mesh, cfg).iterations_run;
  }
  CHECK(iters[1] <= iters[2]);
  CHECK(iters[2] <= iters[3]);
}

TEST_CASE("sequential update order also converges") {
  QuadMesh mesh = gen_grid({8, 8, 1.0});
  perturb(mesh, {0.25, 9});
  SmootherConfig cfg;
  cfg.order = UpdateOrder::Sequential;
  cfg.scheme = WeightScheme::variant2();
  const IterationStats st = smooth_planar(mesh, cfg);
  CHECK(st.converged);
}

TEST_CASE("similarity equivariance of one iteration") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    QuadMesh base = gen_grid({5, 5, 1.0});
    perturb(base, {0.3, rng()});
    const testutil::Similarity sim{urand(rng, 0, 6.28), urand(rng, 0.2, 5.0),
                                   {urand(rng, -10, 10), urand(rng, -10, 10), 0.0}};
    for (int v = 0; v <= 3; ++v) {
      SmootherConfig cfg;
      cfg.max_iterations = 1;
      if (v == 0) {
        cfg.algorithm = Algorithm::Laplacian;
      } else {
        cfg.scheme = WeightScheme::variant(v);
      }
      QuadMesh direct = base;
      smooth_planar(direct, cfg);
      testutil::apply(direct, sim);

      QuadMesh transformed = base;
      testutil::apply(transformed, sim);
      smooth_planar(transformed, cfg);

      for (int i = 0; i < direct.node_count(); ++i)
        CHECK(norm(direct.positions[i] - transformed.positions[i]) <
              1e-10 * sim.scale * 20.0);
    }
  }
}

TEST_CASE("stats record the displacement history") {
  QuadMesh mesh = gen_grid({6, 6, 1.0});
  perturb(mesh, {0.3, 4});
  SmootherConfig cfg;
  cfg.max_iterations = 7;
  cfg.tolerance = 1e-14;
  const IterationStats st = smooth_planar(mesh, cfg);
  CHECK(!st.converged);
  CHECK(st.iterations_run == 7);
  CHECK(st.max_displacement_history.size() == 7);
}

TEST_CASE("node without incident quads is an error") {
  QuadMesh mesh = gen_grid({1, 1, 1.0});
  mesh.positions.push_back({5, 5, 0});
  mesh.incident.push_back({});
  mesh.boundary.push_back(0);
  CHECK_THROWS_AS(smooth_node_planar(mesh, 4, WeightScheme::variant1()), MeshError);
  CHECK_THROWS_AS(laplacian_node(mesh, 4), MeshError);
}
