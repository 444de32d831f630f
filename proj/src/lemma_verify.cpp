#include "lagns/lemma_verify.hpp"

#include <algorithm>
#include <cmath>

namespace lagns {

std::vector<double> b0_profile(std::span<const double> v0, double alpha) {
  std::vector<double> out(v0.size());
  for (std::size_t i = 0; i < v0.size(); ++i) {
    if (!(v0[i] > 0.0)) throw DomainError("B0 needs positive v0");
    out[i] = alpha > 0.0 ? std::exp(std::log(v0[i]) - inverse_power(v0[i], alpha) / alpha) : v0[i];
  }
  return out;
}

std::vector<double> d1_field(std::span<const double> u, std::span<const double> u0, const Grid& grid,
                             double weight) {
  const auto cumulative = cumulative_u_integral(u, u0, grid);
  std::vector<double> out(grid.n_cells());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::exp(weight * 0.5 * (cumulative[i] + cumulative[i + 1]));
  }
  return out;
}

std::vector<double> d2_field(std::span<const double> v, double alpha) {
  std::vector<double> out(v.size(), 1.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0)) throw DomainError("D2 needs positive v");
    if (alpha > 0.0) out[i] = std::exp(inverse_power(v[i], alpha) / alpha);
  }
  return out;
}

ReprAccumulator ReprAccumulator::start(const State& initial, const Grid& grid,
                                       const MaterialParams& params, D2Function d2) {
  ReprAccumulator acc;
  acc.alpha = params.alpha;
  acc.k = k_alpha(params.alpha);
  acc.weight = acc.k / params.mu_tilde;
  acc.b0 = b0_profile(initial.v, params.alpha);
  acc.u0_nodes = initial.u;
  acc.integral.assign(grid.n_cells(), 0.0);
  acc.d2 = std::move(d2);
  acc.last_integrand = repr_integrand(initial, acc, grid);
  return acc;
}

std::vector<double> repr_integrand(const State& state, const ReprAccumulator& acc, const Grid& grid) {
  const auto d1 = d1_field(state.u, acc.u0_nodes, grid, acc.weight);
  const auto d2 = acc.d2(state.v, acc.alpha);
  std::vector<double> out(grid.n_cells());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = state.theta[i] / (d1[i] * d2[i]);
  return out;
}

void update_accumulator(ReprAccumulator& acc, const State& state, double dt, const Grid& grid) {
  auto next = repr_integrand(state, acc, grid);
  for (std::size_t i = 0; i < next.size(); ++i) {
    acc.integral[i] += 0.5 * dt * (next[i] + acc.last_integrand[i]);
  }
  acc.last_integrand = std::move(next);
}

double representation_residual(const State& state, const ReprAccumulator& acc, const Grid& grid,
                               const MaterialParams& params) {
  const auto d1 = d1_field(state.u, acc.u0_nodes, grid, acc.weight);
  const auto d2 = acc.d2(state.v, acc.alpha);
  const double c = acc.weight * params.R;
  double worst = 0.0;
  for (std::size_t i = 0; i < state.v.size(); ++i) {
    const double rebuilt = acc.b0[i] * d1[i] * d2[i] * (1.0 + c / acc.b0[i] * acc.integral[i]);
    worst = std::max(worst, std::abs(state.v[i] - rebuilt));
  }
  return worst / field_max(state.v);
}

BoundTracker BoundTracker::start(const State& initial, const Grid& grid, const MaterialParams& params) {
  BoundTracker b;
  b.e0 = total_energy(initial, grid, params);
  b.min_v = field_min(initial.v);
  b.max_v = field_max(initial.v);
  b.min_theta = field_min(initial.theta);
  b.sup_grad_v_sq = grad_l2_sq(initial.v, grid);
  b.sup_grad_theta_sq = grad_l2_sq(initial.theta, grid);
  const auto ux = du_dx_cells(initial.u, grid);
  double ux_sq = 0.0;
  for (double g : ux) ux_sq += g * g;
  b.sup_u_x_sq = grid.dx() * ux_sq;
  return b;
}

double energy_drift(const BoundTracker& tracker, const State& state, const Grid& grid,
                    const MaterialParams& params) {
  const double drift = std::abs(total_energy(state, grid, params) - tracker.e0);
  return tracker.e0 != 0.0 ? drift / std::abs(tracker.e0) : drift;
}

void update_bounds(BoundTracker& b, const State& prev, const State& state, double dt, const Grid& grid,
                   const MaterialParams& params) {
  const double dx = grid.dx();
  const std::size_t nn = grid.n_nodes();
  const std::size_t nc = grid.n_cells();
  const BoundTracker before = b;

  b.max_energy_drift = std::max(b.max_energy_drift, energy_drift(b, state, grid, params));
  b.min_v = std::min(b.min_v, field_min(state.v));
  b.max_v = std::max(b.max_v, field_max(state.v));
  b.min_theta = std::min(b.min_theta, field_min(state.theta));
  b.sup_grad_v_sq = std::max(b.sup_grad_v_sq, grad_l2_sq(state.v, grid));
  b.sup_grad_theta_sq = std::max(b.sup_grad_theta_sq, grad_l2_sq(state.theta, grid));

  const auto ux = du_dx_cells(state.u, grid);
  double ux_sq = 0.0;
  for (double g : ux) ux_sq += g * g;
  b.sup_u_x_sq = std::max(b.sup_u_x_sq, dx * ux_sq);

  b.int_max_theta += dt * field_max(prev.theta);

  double uxx_sq = 0.0;
  for (std::size_t j = 1; j + 1 < nn; ++j) {
    const double uxx = (prev.u[j + 1] - 2.0 * prev.u[j] + prev.u[j - 1]) / (dx * dx);
    uxx_sq += uxx * uxx;
  }
  b.int_uxx_sq += dt * dx * uxx_sq;

  double ut_sq = 0.0;
  for (std::size_t j = 0; j < nn; ++j) {
    const double ut = (state.u[j] - prev.u[j]) / dt;
    ut_sq += node_weight(j, nn) * ut * ut;
  }
  b.int_ut_sq += dt * dx * ut_sq;

  double tht_sq = 0.0, thxx_sq = 0.0;
  for (std::size_t i = 0; i < nc; ++i) {
    const double tht = (state.theta[i] - prev.theta[i]) / dt;
    tht_sq += tht * tht;
    if (i > 0 && i + 1 < nc) {
      const double thxx = (prev.theta[i + 1] - 2.0 * prev.theta[i] + prev.theta[i - 1]) / (dx * dx);
      thxx_sq += thxx * thxx;
    }
  }
  b.int_theta_t_sq += dt * dx * tht_sq;
  b.int_theta_xx_sq += dt * dx * thxx_sq;

  const bool monotone = b.int_max_theta >= before.int_max_theta && b.int_uxx_sq >= before.int_uxx_sq &&
                        b.int_ut_sq >= before.int_ut_sq && b.int_theta_t_sq >= before.int_theta_t_sq &&
                        b.int_theta_xx_sq >= before.int_theta_xx_sq && b.min_v <= before.min_v &&
                        b.min_theta <= before.min_theta;
  if (!monotone) ++b.monotonicity_violations;
}

D1Check d1_bound_check(const ReprAccumulator& acc, const State& state, const Grid& grid, double e0) {
  D1Check check;
  check.band = acc.weight * std::sqrt(2.0 * std::abs(e0));
  const auto d1 = d1_field(state.u, acc.u0_nodes, grid, acc.weight);
  double margin = check.band;
  for (double d : d1) margin = std::min(margin, check.band - std::abs(std::log(d)));
  check.margin = margin;
  check.inside = margin >= 0.0;
  return check;
}

std::pair<double, double> boundary_stress_residual(const State& state, const MaterialParams& params,
                                                   const Grid& grid, BoundaryKind bc) {
  const auto r = compatibility_residual(state, grid, params, bc);
  return {r.left, r.right};
}

}  // namespace lagns
