#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lagns/constitutive.hpp"
#include "lagns/grid.hpp"
#include "lagns/mms.hpp"

namespace lagns {

enum class BoundaryKind {
  StressFree,  // total stress zero at both ends, insulated
  NoSlip,      // u = 0 at both ends, insulated
};

std::string to_string(BoundaryKind bc);

struct StepControls {
  double cfl = 0.5;
  double dt_min = 1e-10;
  int max_picard = 50;
  double picard_tol = 1e-11;
  // Passes of the u -> v -> theta sequence per step. The first pass uses the
  // old-state viscosity and pressure; later passes re-evaluate them at the
  // latest iterate until u, v and theta change by less than coupling_tol
  // (relative), so the stress enforced at the boundary is the end-of-step
  // stress. One pass gives the lagged-coefficient scheme.
  int max_coupling_passes = 30;
  double coupling_tol = 1e-10;

  void validate() const;
};

/// Everything a step needs besides the state itself.
struct Problem {
  MaterialParams params;
  BoundaryKind bc = BoundaryKind::StressFree;
  StepControls controls;
  std::optional<MmsCase> mms;
};

/// Raised when the step size falls below dt_min without an admissible step.
class SolverAbort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Initial data rejected before stepping (non-positive profile, wrong end conditions).
class ProfileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Closed-form initial profiles on [0,1]. `u0` is used only for NoSlip;
/// StressFree runs derive the velocity from the stress balance.
struct InitialProfile {
  std::function<double(double)> v0;
  std::function<double(double)> theta0;
  std::function<double(double)> u0;
};

/// Samples the profile and builds data compatible with the boundary family.
/// StressFree: u0(x) = int_0^x R theta0 / mu(v0) dy, so the total stress is
/// identically zero at t = 0. NoSlip: u0 from the profile with u0(0) = u0(1) = 0.
State compatible_initial_data(const InitialProfile& profile, const MaterialParams& params,
                              BoundaryKind bc, const Grid& grid);

/// Boundary mismatch: (|sigma(0)|, |sigma(1)|) for StressFree, (|u(0)|, |u(1)|)
/// for NoSlip, followed by the one-sided |theta_x| at each end.
struct CompatibilityResidual {
  double left = 0.0;
  double right = 0.0;
  double theta_x_left = 0.0;
  double theta_x_right = 0.0;
};

CompatibilityResidual compatibility_residual(const State& state, const Grid& grid,
                                             const MaterialParams& params, BoundaryKind bc);

/// Total stress per cell at the current state.
std::vector<double> cell_stress(const State& state, const Grid& grid, const MaterialParams& params);

/// Quadratic extrapolation of the three cell stresses nearest each end to the end node.
std::pair<double, double> boundary_stress_extrapolation(std::span<const double> sigma_cells);

double dt_control(const State& state, const Grid& grid, const MaterialParams& params,
                  const StepControls& controls);

/// Backward-Euler velocity update: implicit viscous stress with mu(v^n)/v^n,
/// explicit pressure P^n. `boundary_stress` is the imposed stress at (x=0, x=1)
/// for StressFree; `source` (nodes) may be empty. When `coefficients` is given,
/// mu/v and P are taken from it instead of from `state`.
std::vector<double> momentum_step(const State& state, double dt, const Grid& grid,
                                  const MaterialParams& params, BoundaryKind bc,
                                  std::pair<double, double> boundary_stress = {0.0, 0.0},
                                  std::span<const double> source = {},
                                  const State* coefficients = nullptr);

/// v^{n+1} = v^n + dt (u^{n+1}_x + source). No positivity check.
std::vector<double> continuity_step(const State& state, std::span<const double> new_u, double dt,
                                    const Grid& grid, std::span<const double> source = {});

struct TemperatureResult {
  std::vector<double> theta;
  int picard_iterations = 0;
  bool converged = false;
};

/// Backward-Euler temperature update with Picard-lagged conductivity.
/// Viscous heating uses mu(v)/v at `heating_v` (default: the old volume).
TemperatureResult temperature_step(const State& state, std::span<const double> new_u,
                                   std::span<const double> new_v, double dt, const Grid& grid,
                                   const MaterialParams& params, const StepControls& controls,
                                   std::span<const double> source = {},
                                   std::span<const double> heating_v = {});

struct StepResult {
  State state;
  double dt = 0.0;       // step actually taken
  int rejections = 0;    // halvings before acceptance
  int picard_iterations = 0;
  int coupling_passes = 0;
};

/// One time step u -> v -> theta, halving dt on positivity, Picard or coupling failure.
/// Throws SolverAbort once dt drops below controls.dt_min.
StepResult step(const State& state, double dt, const Grid& grid, const Problem& problem);

}  // namespace lagns
