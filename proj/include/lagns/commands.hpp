#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lagns/run.hpp"
#include "lagns/scenario.hpp"

namespace lagns {

namespace exit_code {
inline constexpr int kSuccess = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kSolverAbort = 3;
}  // namespace exit_code

enum class CheckStatus { Pass, Fail, NotApplicable };

struct VerifyCheck {
  std::string name;      // short key, e.g. "volume-representation"
  std::string property;  // what is asserted
  CheckStatus status = CheckStatus::NotApplicable;
  std::string detail;    // measured values
};

/// Thresholds applied by `verify`.
struct VerifyThresholds {
  double repr_initial = 1e-12;
  double repr_dynamic = 1e-3;
  double steady_energy_drift = 1e-12;
  double energy_drift_per_time_step = 1.0;  // relative drift <= this * max dt * t_end
  double boundary_ratio = 10.0;             // |sigma(end)| <= ratio * dx^2 * max|sigma|
};

std::vector<VerifyCheck> verify_checks(const Scenario& scenario, const RunResult& result,
                                       const VerifyThresholds& thresholds = {});

bool all_pass(const std::vector<VerifyCheck>& checks);
void print_checks(const std::vector<VerifyCheck>& checks, std::ostream& out);

int cmd_run(const std::string& config_path, const std::string& out_dir, std::ostream& out,
            std::ostream& err);
int cmd_verify(const std::string& config_path, std::ostream& out, std::ostream& err,
               const RunOptions& options = {});
int cmd_convergence(const std::string& config_path, int levels, std::ostream& out, std::ostream& err);
int cmd_sweep(const std::string& config_path, const std::vector<double>& alphas,
              const std::vector<double>& betas, const std::string& out_dir, std::ostream& out,
              std::ostream& err);

}  // namespace lagns
