#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "lagns/grid.hpp"
#include "lagns/lemma_verify.hpp"
#include "lagns/scenario.hpp"

namespace lagns {

/// One output row; the column order is the timeseries file contract.
struct DiagnosticsRow {
  double t = 0.0;
  double energy = 0.0;
  double energy_drift = 0.0;
  double min_v = 0.0;
  double max_v = 0.0;
  double min_theta = 0.0;
  double max_theta = 0.0;
  double repr_residual = 0.0;
  double d1_margin = 0.0;
  double boundary_residual_left = 0.0;
  double boundary_residual_right = 0.0;
  double sup_grad_v_sq = 0.0;
  double sup_grad_theta_sq = 0.0;
  double int_max_theta = 0.0;
  double int_uxx_sq = 0.0;
  double int_ut_sq = 0.0;
  double dt = 0.0;

  static constexpr std::size_t kColumns = 17;
  static const std::array<std::string_view, kColumns>& column_names();
  std::array<double, kColumns> values() const;
  static DiagnosticsRow from_values(const std::array<double, kColumns>& values);

  bool operator==(const DiagnosticsRow&) const = default;
};

struct RejectionEvent {
  double t = 0.0;
  double dt_requested = 0.0;
  int halvings = 0;
};

struct DiagnosticsReport {
  std::vector<DiagnosticsRow> rows;
  bool completed = false;
  std::string abort_reason;

  long steps = 0;
  std::vector<RejectionEvent> rejections;

  double t0_repr_residual = 0.0;
  double final_repr_residual = 0.0;
  double min_d1_margin = 0.0;      // over every accepted step
  int d1_violations = 0;
  int accumulator_decreases = 0;   // cells where the running time integral shrank
  double sigma_scale = 0.0;        // running max of |sigma| over cells
  double max_boundary_ratio = 0.0; // boundary residual / (dx^2 sigma_scale) at output times
  BoundTracker tracker;
};

struct RunOptions {
  /// Replaceable D2 evaluator, for mutation testing of the representation check.
  D2Function d2 = d2_field;
};

struct RunResult {
  Grid grid;
  State initial;
  State final_state;
  DiagnosticsReport report;
};

/// Integrates the scenario from t = 0 to t_end, updating the representation
/// accumulator and the bound tracker after every accepted step. Rows are
/// emitted at every multiple of output_every not exceeding t_end. A solver
/// abort is returned as an incomplete report with the rows gathered so far.
RunResult run(const Scenario& scenario, const RunOptions& options = {});

}  // namespace lagns
