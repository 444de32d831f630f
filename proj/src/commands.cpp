#include "lagns/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>

#include "lagns/convergence.hpp"
#include "lagns/io.hpp"

namespace lagns {

namespace {

std::string fmt(const char* pattern, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

std::string fmt(const char* pattern, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

std::string fmt(const char* pattern, double a, double b, double c) {
  char buf[192];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

VerifyCheck check(std::string name, std::string property) {
  return {std::move(name), std::move(property), CheckStatus::NotApplicable, {}};
}

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

bool finite_all(std::initializer_list<double> xs) {
  return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
}

std::string_view status_text(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::NotApplicable: return "N/A";
  }
  return "?";
}

bool steady_constant_state(const Scenario& s) {
  return !s.mms && s.profile.name == "constant";
}

}  // namespace

std::vector<VerifyCheck> verify_checks(const Scenario& scenario, const RunResult& result,
                                       const VerifyThresholds& th) {
  const DiagnosticsReport& rep = result.report;
  const BoundTracker& tr = rep.tracker;
  const bool manufactured = scenario.mms.has_value();
  const bool stress_free = scenario.bc == BoundaryKind::StressFree;
  std::vector<VerifyCheck> checks;

  {
    auto c = check("volume-representation-initial",
                   "closed-form volume representation exact at t = 0");
    if (stress_free && !manufactured) {
      c.status = pass_if(rep.t0_repr_residual <= th.repr_initial);
      c.detail = fmt("residual %.3e <= %.0e", rep.t0_repr_residual, th.repr_initial);
    } else {
      c.detail = "needs stress-free ends and no sources";
    }
    checks.push_back(c);
  }
  {
    auto c = check("volume-representation",
                   "closed-form volume representation holds along the run");
    if (stress_free && !manufactured) {
      double worst = rep.final_repr_residual;
      for (const auto& row : rep.rows) worst = std::max(worst, row.repr_residual);
      c.status = pass_if(worst <= th.repr_dynamic);
      c.detail = fmt("max residual %.3e <= %.0e", worst, th.repr_dynamic);
    } else {
      c.detail = "needs stress-free ends and no sources";
    }
    checks.push_back(c);
  }
  {
    auto c = check("energy-conservation",
                   "total energy conserved up to the time-stepping error");
    if (manufactured) {
      c.detail = "sources inject energy";
    } else if (steady_constant_state(scenario)) {
      c.status = pass_if(tr.max_energy_drift <= th.steady_energy_drift);
      c.detail = fmt("steady state, drift %.3e <= %.0e", tr.max_energy_drift, th.steady_energy_drift);
    } else {
      double max_dt = 0.0;
      for (const auto& row : rep.rows) max_dt = std::max(max_dt, row.dt);
      const double bound = th.energy_drift_per_time_step * max_dt * scenario.t_end;
      c.status = pass_if(tr.max_energy_drift <= bound);
      c.detail = fmt("drift %.3e <= %.3e (c dt T)", tr.max_energy_drift, bound);
    }
    checks.push_back(c);
  }
  {
    auto c = check("positivity",
                   "specific volume and temperature stay positive");
    c.status = pass_if(tr.min_v > 0.0 && tr.min_theta > 0.0);
    c.detail = fmt("min v %.4g, min theta %.4g, halvings %g", tr.min_v, tr.min_theta,
                   static_cast<double>(rep.rejections.size()));
    checks.push_back(c);
  }
  {
    auto c = check("d1-band",
                   "exp(-k sqrt(2 E0)) <= D1 <= exp(k sqrt(2 E0)) at every step");
    if (stress_free && !manufactured) {
      c.status = pass_if(rep.d1_violations == 0 && rep.min_d1_margin >= 0.0);
      c.detail = fmt("min margin %.4g, violations %g", rep.min_d1_margin,
                     static_cast<double>(rep.d1_violations));
    } else {
      c.detail = "needs stress-free ends and no sources";
    }
    checks.push_back(c);
  }
  {
    auto c = check("volume-bounds",
                   "specific volume bounded above and below");
    c.status = pass_if(tr.min_v > 0.0 && std::isfinite(tr.max_v));
    c.detail = fmt("%.4g <= v <= %.4g", tr.min_v, tr.max_v);
    checks.push_back(c);
  }
  {
    auto c = check("time-integrated-max-temperature",
                   "int_0^T max theta dt finite");
    c.status = pass_if(std::isfinite(tr.int_max_theta));
    c.detail = fmt("%.6g", tr.int_max_theta);
    checks.push_back(c);
  }
  {
    auto c = check("volume-gradient",
                   "sup_t ||v_x||^2 finite");
    c.status = pass_if(std::isfinite(tr.sup_grad_v_sq));
    c.detail = fmt("%.6g", tr.sup_grad_v_sq);
    checks.push_back(c);
  }
  {
    auto c = check("velocity-regularity",
                   "sup ||u_x||^2, int ||u_xx||^2, int ||u_t||^2 finite");
    c.status = pass_if(finite_all({tr.sup_u_x_sq, tr.int_uxx_sq, tr.int_ut_sq}));
    c.detail = fmt("%.6g, %.6g, %.6g", tr.sup_u_x_sq, tr.int_uxx_sq, tr.int_ut_sq);
    checks.push_back(c);
  }
  {
    auto c = check("temperature-regularity",
                   "sup ||theta_x||^2, int ||theta_t||^2, int ||theta_xx||^2 finite");
    c.status = pass_if(finite_all({tr.sup_grad_theta_sq, tr.int_theta_t_sq, tr.int_theta_xx_sq}));
    c.detail = fmt("%.6g, %.6g, %.6g", tr.sup_grad_theta_sq, tr.int_theta_t_sq, tr.int_theta_xx_sq);
    checks.push_back(c);
  }
  {
    auto c = check("monotone-accumulators",
                   "running integrals never decrease, minima never increase");
    c.status = pass_if(rep.accumulator_decreases == 0 && tr.monotonicity_violations == 0);
    c.detail = fmt("violations %g", static_cast<double>(rep.accumulator_decreases + tr.monotonicity_violations));
    checks.push_back(c);
  }
  {
    auto c = check("boundary-conditions",
                   "");
    if (!stress_free) {
      c.property = "u = 0 at both walls";
      double worst = 0.0;
      for (const auto& row : rep.rows) {
        worst = std::max({worst, row.boundary_residual_left, row.boundary_residual_right});
      }
      c.status = pass_if(worst == 0.0);
      c.detail = fmt("max |u(wall)| %.3e", worst);
    } else if (manufactured) {
      c.property = "end stress vanishes";
      c.detail = "manufactured stress imposed at the ends";
    } else {
      c.property = "|sigma(end)| <= C dx^2 max|sigma|";
      c.status = pass_if(rep.max_boundary_ratio <= th.boundary_ratio);
      c.detail = fmt("ratio %.3g <= %.3g", rep.max_boundary_ratio, th.boundary_ratio);
    }
    checks.push_back(c);
  }
  return checks;
}

bool all_pass(const std::vector<VerifyCheck>& checks) {
  return std::none_of(checks.begin(), checks.end(),
                      [](const VerifyCheck& c) { return c.status == CheckStatus::Fail; });
}

void print_checks(const std::vector<VerifyCheck>& checks, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    out << c.name << std::string(width + 2 - c.name.size(), ' ') << status_text(c.status);
    out << std::string(6 - status_text(c.status).size(), ' ') << c.property;
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << '\n';
  }
}

int cmd_run(const std::string& config_path, const std::string& out_dir, std::ostream& out,
            std::ostream& err) {
  Scenario scenario;
  try {
    scenario = load_config(config_path);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return exit_code::kUsage;
  }

  std::optional<RunResult> maybe;
  try {
    maybe = run(scenario);
  } catch (const ProfileError& e) {
    err << "initial data rejected: " << e.what() << '\n';
    return exit_code::kUsage;
  }
  const RunResult& result = *maybe;

  try {
    std::filesystem::create_directories(out_dir);
    emit_timeseries(result.report, (std::filesystem::path(out_dir) / "timeseries.csv").string());
    emit_snapshot(result.final_state, result.grid,
                  (std::filesystem::path(out_dir) / "snapshot_final.txt").string());
  } catch (const std::exception& e) {
    err << "output error: " << e.what() << '\n';
    return exit_code::kUsage;
  }

  if (!result.report.completed) {
    err << "solver abort at t = " << format_double(result.final_state.t) << ": "
        << result.report.abort_reason << '\n';
    return exit_code::kSolverAbort;
  }
  out << "completed t = " << format_double(result.final_state.t) << " in " << result.report.steps
      << " steps (" << result.report.rejections.size() << " step halvings)\n";
  return exit_code::kSuccess;
}

int cmd_verify(const std::string& config_path, std::ostream& out, std::ostream& err,
               const RunOptions& options) {
  Scenario scenario;
  std::optional<RunResult> maybe;
  try {
    scenario = load_config(config_path);
    maybe = run(scenario, options);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const ProfileError& e) {
    err << "initial data rejected: " << e.what() << '\n';
    return exit_code::kUsage;
  }
  const RunResult& result = *maybe;
  if (!result.report.completed) {
    err << "solver abort: " << result.report.abort_reason << '\n';
    return exit_code::kSolverAbort;
  }
  const auto checks = verify_checks(scenario, result);
  print_checks(checks, out);
  const bool ok = all_pass(checks);
  out << (ok ? "verify: all checks passed\n" : "verify: FAILED\n");
  return ok ? exit_code::kSuccess : exit_code::kVerificationFailure;
}

int cmd_convergence(const std::string& config_path, int levels, std::ostream& out, std::ostream& err) {
  ConvergenceReport report;
  try {
    report = run_convergence(load_config(config_path), levels);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const SolverAbort& e) {
    err << "solver abort: " << e.what() << '\n';
    return exit_code::kSolverAbort;
  }

  out << "n_cells,dt,err_v,err_u,err_theta\n";
  for (const auto& l : report.levels) {
    out << l.n_cells << ',' << format_double(l.dt) << ',' << format_double(l.max_error_v) << ','
        << format_double(l.max_error_u) << ',' << format_double(l.max_error_theta) << '\n';
  }
  if (report.at_rounding_floor) {
    out << "errors at rounding floor on every level; order check skipped\n";
    return exit_code::kSuccess;
  }
  const auto print_orders = [&out](const char* field, const std::vector<double>& orders) {
    out << "order " << field << ':';
    if (orders.empty()) out << " (at rounding floor)";
    for (double o : orders) out << ' ' << fmt("%.3f", o);
    out << '\n';
  };
  print_orders("v", report.order_v);
  print_orders("u", report.order_u);
  print_orders("theta", report.order_theta);
  const double min_order = report.min_order();
  const bool ok = min_order >= 1.7;
  out << "min order " << fmt("%.3f", min_order) << (ok ? " >= 1.7: PASS\n" : " < 1.7: FAIL\n");
  return ok ? exit_code::kSuccess : exit_code::kVerificationFailure;
}

int cmd_sweep(const std::string& config_path, const std::vector<double>& alphas,
              const std::vector<double>& betas, const std::string& out_dir, std::ostream& out,
              std::ostream& err) {
  if (alphas.empty() || betas.empty()) {
    err << "sweep needs non-empty alpha and beta lists\n";
    return exit_code::kUsage;
  }
  for (double b : betas) {
    if (!(b > 0.0)) {
      err << "beta = " << format_double(b) << " rejected: admissible regime is alpha >= 0, beta > 0\n";
      return exit_code::kUsage;
    }
  }
  for (double a : alphas) {
    if (!(a >= 0.0)) {
      err << "alpha = " << format_double(a) << " rejected: admissible regime is alpha >= 0, beta > 0\n";
      return exit_code::kUsage;
    }
  }

  Scenario base;
  try {
    base = load_config(config_path);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return exit_code::kUsage;
  }

  struct Job {
    double alpha, beta;
    std::future<RunResult> result;
  };
  std::vector<Job> jobs;
  for (double a : alphas) {
    for (double b : betas) {
      Scenario s = base;
      s.params.alpha = a;
      s.params.beta = b;
      jobs.push_back({a, b, std::async(std::launch::async, [s]() { return run(s); })});
    }
  }

  namespace fs = std::filesystem;
  try {
    fs::create_directories(out_dir);
  } catch (const fs::filesystem_error& e) {
    err << "output error: " << e.what() << '\n';
    return exit_code::kUsage;
  }

  bool any_abort = false;
  std::ofstream summary(fs::path(out_dir) / "summary.csv");
  if (!summary) {
    err << "output error: cannot write summary.csv\n";
    return exit_code::kUsage;
  }
  summary << "alpha,beta,status,min_v,min_theta,repr_residual\n";
  for (auto& job : jobs) {
    std::optional<RunResult> maybe;
    try {
      maybe = job.result.get();
    } catch (const ProfileError& e) {
      err << "initial data rejected: " << e.what() << '\n';
      return exit_code::kUsage;
    }
    const RunResult& r = *maybe;
    const std::string name =
        "timeseries_alpha" + format_double(job.alpha) + "_beta" + format_double(job.beta) + ".csv";
    emit_timeseries(r.report, (fs::path(out_dir) / name).string());
    if (!r.report.completed) {
      any_abort = true;
      err << "alpha = " << format_double(job.alpha) << ", beta = " << format_double(job.beta)
          << ": solver abort: " << r.report.abort_reason << '\n';
    }
    summary << format_double(job.alpha) << ',' << format_double(job.beta) << ','
            << (r.report.completed ? "completed" : "aborted") << ','
            << format_double(field_min(r.final_state.v)) << ','
            << format_double(field_min(r.final_state.theta)) << ','
            << format_double(r.report.final_repr_residual) << '\n';
  }
  out << jobs.size() << " runs written to " << out_dir << '\n';
  return any_abort ? exit_code::kSolverAbort : exit_code::kSuccess;
}

}  // namespace lagns
