#include <doctest.h>

#include <cmath>

#include "hyptutte/balance.hpp"
#include "hyptutte/meshing.hpp"
#include "test_util.hpp"

using namespace hyptutte;
using testutil::Rng;

namespace {

GeodesicMapping coarse_mesh() {
  static GeodesicMapping m = builtin_mesh(
      std::make_shared<SurfaceGroup>(SurfaceGroup::regular(2)));
  return m;
}

}  // namespace

TEST_CASE("solver config validation") {
  SolverConfig cfg;
  CHECK_NOTHROW(cfg.check());
  cfg.tau = 0.0;
  CHECK_THROWS_AS(cfg.check(), Error);
  cfg = SolverConfig{};
  cfg.backtrack = 1.0;
  CHECK_THROWS_AS(cfg.check(), Error);
  cfg = SolverConfig{};
  cfg.eps = -1.0;
  CHECK_THROWS_AS(cfg.check(), Error);
}

TEST_CASE("single-vertex update converges to the weighted midpoint") {
  // one free vertex with two unit-weight neighbors at distance 2 apart,
  // started at one of the neighbors
  HPoint o = origin();
  HPoint left = exp_map(TangentVec(o, Vec3(-1.0, 0.2, 0.0)));
  HPoint right = exp_map(TangentVec(o, Vec3(1.0, -0.2, 0.0)));
  GeodesicMapping m;
  m.group = std::make_shared<SurfaceGroup>(SurfaceGroup::regular(2));
  m.complex = std::make_shared<Complex>(3, std::vector<std::array<int, 3>>{{0, 1, 2}});
  m.labels.l.assign(size_t(m.complex->dir_edge_count()), Label{});
  m.lifts = {left, left, right};  // vertex 0 starts at its left neighbor
  Weights w = uniform_weights(*m.complex);

  HPoint mid = exp_map(TangentVec(left, 0.5 * log_map(left, right).v));
  for (int it = 0; it < 200; ++it) {
    TangentVec r = residue(m, w, 0);
    double wsum = vertex_weight(m, w, 0);
    m.lifts[0] = exp_map(TangentVec(m.lifts[0], (0.5 / wsum) * r.v));
  }
  CHECK(dist(m.lifts[0], mid) < 1e-12);
  CHECK(residue(m, w, 0).norm() < 1e-12);
}

TEST_CASE("step: mu measured before, gauge invariance of mu") {
  GeodesicMapping m = coarse_mesh();
  Weights w = random_weights(*m.complex, 3.0, 5);
  auto [m1, mu] = step(m, w, 0.5);
  CHECK(mu == doctest::Approx(max_normalized_residual(m, w)).epsilon(1e-14));
  CHECK(distance_X(m, m1) > 0.0);

  Word bw = word_from_string("b1", 2);
  GeodesicMapping g = gauge(m, 3, m.group->eval(bw), bw);
  CHECK(max_normalized_residual(g, w) ==
        doctest::Approx(max_normalized_residual(m, w)).epsilon(1e-10));
}

TEST_CASE("solve: immediate return at a balanced start") {
  GeodesicMapping m = coarse_mesh();
  Weights w = uniform_weights(*m.complex);
  SolverConfig cfg;
  SolveResult r = solve(m, w, cfg);
  CHECK(r.trace.converged);
  SolveResult again = solve(r.mapping, w, cfg);
  CHECK(again.trace.sweeps == 0);
  CHECK(again.trace.final_mu < cfg.eps);
}

TEST_CASE("solve: converges on the coarse mesh, energy non-increasing") {
  GeodesicMapping m = coarse_mesh();
  Weights w = uniform_weights(*m.complex);
  SolverConfig cfg;
  SolveResult r = solve(m, w, cfg);
  CHECK(r.trace.converged);
  CHECK(r.trace.final_mu < 1e-10);
  CHECK(max_normalized_residual(r.mapping, w) < 1e-10);
  // symmetric weights: discrete Dirichlet descent
  for (size_t k = 1; k < r.trace.energy_history.size(); ++k)
    CHECK(r.trace.energy_history[k] <= r.trace.energy_history[k - 1] + 1e-12);
  // mu history is recorded and ends below eps
  CHECK(r.trace.mu_history.size() == size_t(r.trace.sweeps) + 1);
  CHECK(r.trace.mu_history.back() < 1e-10);
}

TEST_CASE("solve: two perturbed starts agree (uniqueness)") {
  GeodesicMapping m = coarse_mesh();
  Weights w = uniform_weights(*m.complex);
  SolverConfig cfg;
  cfg.eps = 1e-12;
  SolveResult a = solve(perturb_lifts(m, 0.5, 100), w, cfg);
  SolveResult b = solve(perturb_lifts(m, 0.5, 200), w, cfg);
  GeodesicMapping na = normalize_anchor(a.mapping);
  GeodesicMapping nb = normalize_anchor(b.mapping);
  CHECK(distance_X(na, nb) < 1e-8);
}

TEST_CASE("solve: scale equivariance in the weights") {
  GeodesicMapping m = coarse_mesh();
  Weights w = random_weights(*m.complex, 4.0, 17);
  SolverConfig cfg;
  GeodesicMapping start = perturb_lifts(m, 0.2, 7);
  SolveResult base = solve(start, w, cfg);
  for (double c : {0.1, 10.0}) {
    Weights wc;
    wc.w = w.w;
    for (auto& x : wc.w) x *= c;
    SolveResult scaled = solve(start, wc, cfg);
    CHECK(distance_X(normalize_anchor(base.mapping), normalize_anchor(scaled.mapping)) <
          1e-9);
  }
}

TEST_CASE("solve_warm: unchanged weights return immediately") {
  GeodesicMapping m = coarse_mesh();
  Weights w = uniform_weights(*m.complex);
  SolverConfig cfg;
  SolveResult r = solve(m, w, cfg);
  SolveResult again = solve_warm(r.mapping, w, cfg);
  CHECK(again.trace.sweeps == 0);
}

TEST_CASE("solve: budget exhaustion raises NoConvergence with trace") {
  GeodesicMapping m = coarse_mesh();
  Weights w = uniform_weights(*m.complex);
  SolverConfig cfg;
  cfg.max_iters = 3;
  try {
    solve(perturb_lifts(m, 0.3, 5), w, cfg);
    FAIL("expected NoConvergenceError");
  } catch (const NoConvergenceError& e) {
    CHECK(e.trace.sweeps == 3);
    CHECK(e.trace.final_mu > 0.0);
  }
}

TEST_CASE("solve: unreachable tolerance stops at the residual floor") {
  GeodesicMapping m = coarse_mesh();
  Weights w = uniform_weights(*m.complex);
  SolverConfig cfg;
  cfg.eps = 1e-16;  // below what doubles can express here
  cfg.max_iters = 20000;
  CHECK_THROWS_AS(solve(m, w, cfg), NoConvergenceError);
}
