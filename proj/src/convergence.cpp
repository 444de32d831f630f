#include "lagns/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "lagns/mms.hpp"
#include "lagns/run.hpp"

namespace lagns {

namespace {

constexpr double kRoundingFloor = 1e-12;

double max_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

double ConvergenceReport::min_order() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto* orders : {&order_v, &order_u, &order_theta}) {
    for (double o : *orders) m = std::min(m, o);
  }
  return m;
}

std::vector<double> observed_orders(std::span<const double> errors) {
  std::vector<double> out;
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) out.push_back(std::log2(errors[k] / errors[k + 1]));
  return out;
}

ConvergenceReport run_convergence(const Scenario& scenario, int levels) {
  if (!scenario.mms) throw ConfigError("convergence study needs a manufactured solution (key 'mms')");
  if (levels < 3) throw ConfigError("convergence study needs at least 3 levels");
  scenario.validate();

  double base_dt = 0.0;
  if (scenario.dt) {
    base_dt = *scenario.dt;
  } else {
    const Grid grid(scenario.n_cells);
    base_dt = dt_control(initial_state(scenario, grid), grid, scenario.params, scenario.controls());
  }
  const MmsCase mms = mms_case_by_name(*scenario.mms);

  std::vector<std::future<ConvergenceLevel>> jobs;
  for (int l = 0; l < levels; ++l) {
    Scenario level = scenario;
    level.n_cells = scenario.n_cells << l;
    level.dt = base_dt / std::pow(4.0, l);
    level.output_every = scenario.t_end;
    jobs.push_back(std::async(std::launch::async, [level, mms]() {
      const RunResult r = run(level);
      if (!r.report.completed) throw SolverAbort(r.report.abort_reason);
      const State exact = mms_state(mms, r.grid, r.final_state.t);
      return ConvergenceLevel{level.n_cells, *level.dt, max_diff(r.final_state.v, exact.v),
                              max_diff(r.final_state.u, exact.u), max_diff(r.final_state.theta, exact.theta)};
    }));
  }

  ConvergenceReport report;
  for (auto& job : jobs) report.levels.push_back(job.get());

  std::vector<double> ev, eu, eth;
  double worst = 0.0;
  for (const auto& l : report.levels) {
    ev.push_back(l.max_error_v);
    eu.push_back(l.max_error_u);
    eth.push_back(l.max_error_theta);
    worst = std::max({worst, l.max_error_v, l.max_error_u, l.max_error_theta});
  }
  report.at_rounding_floor = worst < kRoundingFloor;
  if (!report.at_rounding_floor) {
    // A field reproduced to rounding on every level carries no order information.
    const auto orders_of = [](const std::vector<double>& e) {
      return *std::max_element(e.begin(), e.end()) < kRoundingFloor ? std::vector<double>{}
                                                                     : observed_orders(e);
    };
    report.order_v = orders_of(ev);
    report.order_u = orders_of(eu);
    report.order_theta = orders_of(eth);
  }
  return report;
}

}  // namespace lagns
