#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lagns/scenario.hpp"

namespace lagns {

struct ConvergenceLevel {
  std::size_t n_cells = 0;
  double dt = 0.0;
  double max_error_v = 0.0;
  double max_error_u = 0.0;
  double max_error_theta = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceLevel> levels;
  // log2(e_h / e_{h/2}) between consecutive levels, per field (v, u, theta).
  std::vector<double> order_v, order_u, order_theta;
  bool at_rounding_floor = false;  // every error below the floor; orders meaningless

  double min_order() const;
};

/// log2(e_k / e_{k+1}) for consecutive entries.
std::vector<double> observed_orders(std::span<const double> errors);

/// Max-norm errors against the manufactured solution at t_end on `levels`
/// nested grids (n_cells doubling) with dt scaled by 1/4 per level. The base
/// step is the scenario's fixed dt, or the CFL step of the coarsest initial state.
/// Levels run concurrently. Requires an MMS scenario and levels >= 3.
ConvergenceReport run_convergence(const Scenario& scenario, int levels);

}  // namespace lagns
