#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "lagns/lemma_verify.hpp"
#include "lagns/run.hpp"

using namespace lagns;

namespace {

constexpr double kPi = std::numbers::pi;

State uniform_state(const Grid& g, double v, double theta) {
  return {0.0, std::vector<double>(g.n_cells(), v), std::vector<double>(g.n_nodes(), 0.0),
          std::vector<double>(g.n_cells(), theta)};
}

}  // namespace

TEST_CASE("B0 branches") {
  const std::vector<double> v0{0.5, 1.0, 3.0};
  CHECK(b0_profile(v0, 0.0) == v0);
  CHECK(b0_profile(std::vector<double>{1.0}, 1.0)[0] == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(b0_profile(std::vector<double>{1.0}, 2.0)[0] == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
  CHECK_THROWS_AS(b0_profile(std::vector<double>{0.0}, 1.0), DomainError);
}

TEST_CASE("D1 field") {
  const Grid g(20);
  const std::vector<double> u0(21, 0.3);
  for (double d : d1_field(u0, u0, g, 1.0)) CHECK(d == 1.0);
  std::vector<double> u(21, 1.3);
  const auto one = d1_field(u, u0, g, 1.0);
  const auto half = d1_field(u, u0, g, 0.5);
  for (std::size_t i = 0; i < 20; ++i) {
    CHECK(one[i] == doctest::Approx(std::exp(g.cell_center(i))).epsilon(1e-13));
    CHECK(std::log(half[i]) == doctest::Approx(0.5 * std::log(one[i])).epsilon(1e-13));
  }
}

TEST_CASE("D2 field") {
  for (double d : d2_field(std::vector<double>{0.2, 1.0, 9.0}, 0.0)) CHECK(d == 1.0);
  CHECK(d2_field(std::vector<double>{1.0}, 1.0)[0] == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  const auto far = d2_field(std::vector<double>{1.0, 10.0, 1e3, 1e6}, 1.0);
  for (std::size_t i = 0; i + 1 < far.size(); ++i) CHECK(far[i + 1] < far[i]);
  CHECK(far.back() == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("representation is exact at t = 0 for random positive data") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> vd(0.05, 8.0);
  std::uniform_real_distribution<double> ad(0.0, 3.0);
  const Grid g(40);
  for (int trial = 0; trial < 200; ++trial) {
    MaterialParams p;
    p.alpha = trial % 2 == 0 ? 0.0 : ad(rng);
    p.mu_tilde = 0.5 + ad(rng);
    p.R = 0.5 + ad(rng);
    State s = uniform_state(g, 1.0, 1.0);
    for (auto& v : s.v) v = vd(rng);
    for (auto& th : s.theta) th = vd(rng);
    for (auto& u : s.u) u = vd(rng) - 4.0;
    const auto acc = ReprAccumulator::start(s, g, p);
    CHECK(representation_residual(s, acc, g, p) <= 1e-12);
  }
}

TEST_CASE("accumulator trapezoid update") {
  MaterialParams p;
  p.alpha = 0.0;  // D2 = 1
  const Grid g(6);
  const State s = uniform_state(g, 1.0, 0.7);  // u = u0 so D1 = 1, integrand = theta
  auto acc = ReprAccumulator::start(s, g, p);
  for (double I : acc.integral) CHECK(I == 0.0);
  update_accumulator(acc, s, 0.1, g);
  for (double I : acc.integral) CHECK(I == doctest::Approx(0.07).epsilon(1e-15));
  update_accumulator(acc, s, 0.1, g);
  for (double I : acc.integral) CHECK(I == doctest::Approx(0.14).epsilon(1e-15));

  const State cold = uniform_state(g, 1.0, 1e-300);
  auto acc2 = ReprAccumulator::start(cold, g, p);
  update_accumulator(acc2, cold, 0.5, g);
  for (double I : acc2.integral) CHECK(I < 1e-299);
}

TEST_CASE("representation holds along a short stress-free run for general constants") {
  for (double alpha : {0.0, 0.5, 1.0}) {
    Scenario s;
    s.params.alpha = alpha;
    s.params.mu_tilde = 1.7;
    s.params.R = 0.6;
    s.params.c_v = 2.0;
    s.n_cells = 64;
    s.t_end = 0.1;
    s.output_every = 0.05;
    const RunResult r = run(s);
    REQUIRE(r.report.completed);
    CHECK(r.report.t0_repr_residual <= 1e-12);
    CHECK(r.report.final_repr_residual < 1e-3);
    CHECK(r.report.final_repr_residual > 0.0);
  }
}

TEST_CASE("energy drift") {
  MaterialParams p;
  const Grid g(8);
  const State s = uniform_state(g, 1.0, 1.0);
  const auto tr = BoundTracker::start(s, g, p);
  CHECK(tr.e0 == doctest::Approx(1.0));
  CHECK(energy_drift(tr, s, g, p) == 0.0);
  State hotter = s;
  for (auto& th : hotter.theta) th = 1.01;
  CHECK(energy_drift(tr, hotter, g, p) == doctest::Approx(0.01).epsilon(1e-12));

  BoundTracker zero = tr;
  zero.e0 = 0.0;
  CHECK(energy_drift(zero, s, g, p) == doctest::Approx(1.0));
}

TEST_CASE("D1 band") {
  MaterialParams p;
  const Grid g(16);
  const State s = uniform_state(g, 1.0, 1.0);  // E0 = 1
  const auto acc = ReprAccumulator::start(s, g, p);
  const auto c = d1_bound_check(acc, s, g, 1.0);
  CHECK(c.inside);
  CHECK(c.band == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(c.margin == doctest::Approx(c.band));

  p.alpha = 0.0;
  const auto acc0 = ReprAccumulator::start(s, g, p);
  CHECK(d1_bound_check(acc0, s, g, 1.0).band == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));

  State moved = s;
  for (auto& u : moved.u) u = 3.0;  // int_0^1 u = 3 > sqrt 2
  const auto out = d1_bound_check(acc, moved, g, 1.0);
  CHECK_FALSE(out.inside);
  CHECK(out.margin < 0.0);
}

TEST_CASE("bound tracker") {
  MaterialParams p;
  const Grid g(16);
  const State s = uniform_state(g, 1.0, 1.0);
  auto tr = BoundTracker::start(s, g, p);
  State prev = s;
  for (int k = 0; k < 10; ++k) {
    State next = prev;
    next.t += 0.1;
    update_bounds(tr, prev, next, 0.1, g, p);
    prev = next;
  }
  CHECK(tr.int_max_theta == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(tr.int_uxx_sq == 0.0);
  CHECK(tr.int_ut_sq == 0.0);
  CHECK(tr.int_theta_t_sq == 0.0);
  CHECK(tr.int_theta_xx_sq == 0.0);
  CHECK(tr.sup_grad_v_sq == 0.0);
  CHECK(tr.min_v == 1.0);
  CHECK(tr.min_theta == 1.0);
  CHECK(tr.monotonicity_violations == 0);

  // Running sup and min follow the trajectory.
  State bumped = s;
  bumped.t = 0.1;
  for (std::size_t i = 0; i < 16; ++i) bumped.v[i] = 1.0 + 0.1 * std::cos(kPi * g.cell_center(i));
  bumped.theta[4] = 0.5;
  auto tr2 = BoundTracker::start(s, g, p);
  update_bounds(tr2, s, bumped, 0.1, g, p);
  CHECK(tr2.sup_grad_v_sq == doctest::Approx(grad_l2_sq(bumped.v, g)));
  CHECK(tr2.min_theta == 0.5);
  CHECK(tr2.min_v == doctest::Approx(1.0 - 0.1 * std::cos(kPi * g.cell_center(0))));
  update_bounds(tr2, bumped, s, 0.1, g, p);
  CHECK(tr2.sup_grad_v_sq == doctest::Approx(grad_l2_sq(bumped.v, g)));
  CHECK(tr2.min_theta == 0.5);
}

TEST_CASE("boundary stress residual") {
  MaterialParams p;
  const Grid g(16);
  const auto ns = boundary_stress_residual(uniform_state(g, 1.0, 1.0), p, g, BoundaryKind::NoSlip);
  CHECK(ns.first == 0.0);
  CHECK(ns.second == 0.0);

  // Manufactured stress-free run: the extrapolated end stress tracks the imposed stress.
  Scenario s;
  s.mms = "default";
  s.n_cells = 64;
  s.dt = 1e-4;
  s.t_end = 0.1;
  s.output_every = 0.1;
  const RunResult r = run(s);
  REQUIRE(r.report.completed);
  const auto mms = mms_case_by_name("default");
  const auto sigma = cell_stress(r.final_state, r.grid, s.params);
  const auto [l, rr] = boundary_stress_extrapolation(sigma);
  CHECK(std::abs(l - mms_stress(mms, s.params, 0.0, r.final_state.t)) < 1e-3);
  CHECK(std::abs(rr - mms_stress(mms, s.params, 1.0, r.final_state.t)) < 1e-3);
}

TEST_CASE("default stress-free run to T = 1 stays positive") {
  Scenario s;
  s.t_end = 1.0;
  s.output_every = 0.1;
  const RunResult r = run(s);
  REQUIRE(r.report.completed);
  CHECK(r.report.rows.size() == 10);
  CHECK(r.report.tracker.min_v > 0.0);
  CHECK(r.report.tracker.min_theta > 0.0);
  CHECK(r.report.rejections.empty());
  CHECK(r.report.d1_violations == 0);
  CHECK(r.report.accumulator_decreases == 0);
}
