#include "lagns/run.hpp"

#include <algorithm>
#include <cmath>

namespace lagns {

const std::array<std::string_view, DiagnosticsRow::kColumns>& DiagnosticsRow::column_names() {
  static const std::array<std::string_view, kColumns> names = {
      "t",                 "energy",           "energy_drift",          "min_v",
      "max_v",             "min_theta",        "max_theta",             "repr_residual",
      "d1_margin",         "boundary_residual_left", "boundary_residual_right", "sup_grad_v_sq",
      "sup_grad_theta_sq", "int_max_theta",    "int_uxx_sq",            "int_ut_sq",
      "dt_current"};
  return names;
}

std::array<double, DiagnosticsRow::kColumns> DiagnosticsRow::values() const {
  return {t,          energy,
          energy_drift, min_v,
          max_v,      min_theta,
          max_theta,  repr_residual,
          d1_margin,  boundary_residual_left,
          boundary_residual_right, sup_grad_v_sq,
          sup_grad_theta_sq, int_max_theta,
          int_uxx_sq, int_ut_sq,
          dt};
}

DiagnosticsRow DiagnosticsRow::from_values(const std::array<double, kColumns>& x) {
  return {x[0], x[1], x[2], x[3], x[4], x[5], x[6], x[7], x[8],
          x[9], x[10], x[11], x[12], x[13], x[14], x[15], x[16]};
}

namespace {

double max_abs(std::span<const double> f) {
  double m = 0.0;
  for (double x : f) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

RunResult run(const Scenario& scenario, const RunOptions& options) {
  scenario.validate();
  const Grid grid(scenario.n_cells);
  const Problem problem = scenario.problem();
  const MaterialParams& params = scenario.params;

  RunResult result{grid, initial_state(scenario, grid), {}, {}};
  State state = result.initial;
  DiagnosticsReport& report = result.report;

  auto acc = ReprAccumulator::start(state, grid, params, options.d2);
  BoundTracker tracker = BoundTracker::start(state, grid, params);
  report.t0_repr_residual = representation_residual(state, acc, grid, params);
  report.min_d1_margin = d1_bound_check(acc, state, grid, tracker.e0).margin;
  report.sigma_scale = max_abs(cell_stress(state, grid, params));

  const double t_end = scenario.t_end;
  const double eps = 1e-12 * t_end;
  long output_index = 1;
  double last_dt = 0.0;

  try {
    while (state.t < t_end - eps) {
      double dt = scenario.dt ? *scenario.dt : dt_control(state, grid, params, problem.controls);
      const double next_output = static_cast<double>(output_index) * scenario.output_every;
      const double target = std::min(next_output, t_end);
      bool lands_on_target = false;
      if (state.t + dt * (1.0 + 1e-6) >= target) {
        dt = target - state.t;
        lands_on_target = true;
      }

      StepResult r = step(state, dt, grid, problem);
      if (r.rejections > 0) {
        report.rejections.push_back({state.t, dt, r.rejections});
        lands_on_target = false;
      }
      if (lands_on_target) r.state.t = target;
      ++report.steps;
      last_dt = r.dt;

      const auto before = acc.integral;
      update_accumulator(acc, r.state, r.dt, grid);
      for (std::size_t i = 0; i < before.size(); ++i) {
        if (acc.integral[i] < before[i]) ++report.accumulator_decreases;
      }
      update_bounds(tracker, state, r.state, r.dt, grid, params);

      const auto d1 = d1_bound_check(acc, r.state, grid, tracker.e0);
      report.min_d1_margin = std::min(report.min_d1_margin, d1.margin);
      if (!d1.inside) ++report.d1_violations;
      report.sigma_scale = std::max(report.sigma_scale, max_abs(cell_stress(r.state, grid, params)));

      state = std::move(r.state);

      if (state.t >= next_output - eps && next_output <= t_end + eps) {
        DiagnosticsRow row;
        row.t = state.t;
        row.energy = total_energy(state, grid, params);
        row.energy_drift = energy_drift(tracker, state, grid, params);
        row.min_v = field_min(state.v);
        row.max_v = field_max(state.v);
        row.min_theta = field_min(state.theta);
        row.max_theta = field_max(state.theta);
        row.repr_residual = representation_residual(state, acc, grid, params);
        row.d1_margin = d1.margin;
        const auto [left, right] = boundary_stress_residual(state, params, grid, scenario.bc);
        row.boundary_residual_left = left;
        row.boundary_residual_right = right;
        row.sup_grad_v_sq = tracker.sup_grad_v_sq;
        row.sup_grad_theta_sq = tracker.sup_grad_theta_sq;
        row.int_max_theta = tracker.int_max_theta;
        row.int_uxx_sq = tracker.int_uxx_sq;
        row.int_ut_sq = tracker.int_ut_sq;
        row.dt = last_dt;
        report.rows.push_back(row);

        if (scenario.bc == BoundaryKind::StressFree && report.sigma_scale > 0.0) {
          const double scale = grid.dx() * grid.dx() * report.sigma_scale;
          report.max_boundary_ratio = std::max(report.max_boundary_ratio, std::max(left, right) / scale);
        }
        ++output_index;
      }
    }
    report.completed = true;
  } catch (const SolverAbort& e) {
    report.completed = false;
    report.abort_reason = e.what();
  }

  report.final_repr_residual = representation_residual(state, acc, grid, params);
  report.tracker = tracker;
  result.final_state = std::move(state);
  return result;
}

}  // namespace lagns
