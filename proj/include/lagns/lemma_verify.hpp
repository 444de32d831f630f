#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "lagns/constitutive.hpp"
#include "lagns/grid.hpp"
#include "lagns/scheme.hpp"

namespace lagns {

// Closed-form volume representation
//
//   v(x,t) = B0(x) D1(x,t) D2(x,t) { 1 + (c R / B0(x)) int_0^t theta / (D1 D2) dtau }
//
// with c = k(alpha) / mu_tilde and
//   B0 = exp(ln v0 - 1/(alpha v0^alpha))   (alpha > 0),   B0 = v0         (alpha = 0)
//   D1 = exp(c int_0^x (u - u0) dy)
//   D2 = exp(1/(alpha v^alpha))            (alpha > 0),   D2 = 1          (alpha = 0)
//
// It holds exactly for stress-free boundaries; on the grid the residual is
// pure discretization error.

std::vector<double> b0_profile(std::span<const double> v0, double alpha);

/// exp(weight * cumulative (u - u0)), the node integral averaged to cell centers
/// before exponentiating.
std::vector<double> d1_field(std::span<const double> u, std::span<const double> u0, const Grid& grid,
                             double weight);

std::vector<double> d2_field(std::span<const double> v, double alpha);

using D2Function = std::function<std::vector<double>(std::span<const double>, double)>;

struct ReprAccumulator {
  std::vector<double> b0;
  std::vector<double> integral;        // int_0^t theta / (D1 D2) per cell
  std::vector<double> u0_nodes;
  std::vector<double> last_integrand;
  double k = 1.0;                      // k(alpha)
  double weight = 1.0;                 // k(alpha) / mu_tilde
  double alpha = 0.0;
  D2Function d2 = d2_field;

  static ReprAccumulator start(const State& initial, const Grid& grid, const MaterialParams& params,
                               D2Function d2 = d2_field);
};

std::vector<double> repr_integrand(const State& state, const ReprAccumulator& acc, const Grid& grid);

/// Trapezoidal time update of the running integral over an accepted step of size dt.
void update_accumulator(ReprAccumulator& acc, const State& state, double dt, const Grid& grid);

/// max_i |v_i - B0 D1 D2 (1 + (c R / B0) I_i)| / max_i v_i
double representation_residual(const State& state, const ReprAccumulator& acc, const Grid& grid,
                               const MaterialParams& params);

/// Running values of the boundedness functionals along a trajectory.
struct BoundTracker {
  double e0 = 0.0;
  double max_energy_drift = 0.0;
  double min_v = 0.0;
  double min_theta = 0.0;
  double max_v = 0.0;
  double sup_grad_v_sq = 0.0;
  double sup_grad_theta_sq = 0.0;
  double sup_u_x_sq = 0.0;
  double int_max_theta = 0.0;
  double int_uxx_sq = 0.0;
  double int_ut_sq = 0.0;
  double int_theta_t_sq = 0.0;
  double int_theta_xx_sq = 0.0;
  int monotonicity_violations = 0;

  static BoundTracker start(const State& initial, const Grid& grid, const MaterialParams& params);
};

/// |E(t) - E0| / E0, or the absolute drift when E0 = 0.
double energy_drift(const BoundTracker& tracker, const State& state, const Grid& grid,
                    const MaterialParams& params);

/// Time integrals use the left-rectangle rule; u_t, theta_t are difference
/// quotients over the step, u_xx and theta_xx interior second differences.
void update_bounds(BoundTracker& tracker, const State& prev, const State& state, double dt,
                   const Grid& grid, const MaterialParams& params);

struct D1Check {
  bool inside = true;
  double margin = 0.0;  // min_i (c s - |ln D1_i|); negative means outside the band
  double band = 0.0;    // c s
};

/// Checks exp(-c s) <= D1 <= exp(c s) with s = sqrt(2 E0), which bounds
/// |int_0^x u dy| through the conserved energy.
D1Check d1_bound_check(const ReprAccumulator& acc, const State& state, const Grid& grid, double e0);

/// StressFree: extrapolated |sigma| at each end. NoSlip: |u(0)|, |u(1)|.
std::pair<double, double> boundary_stress_residual(const State& state, const MaterialParams& params,
                                                   const Grid& grid, BoundaryKind bc);

}  // namespace lagns
