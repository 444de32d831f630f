#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "lagns/constitutive.hpp"
#include "lagns/grid.hpp"
#include "lagns/scheme.hpp"

namespace lagns {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Named initial-profile family.
///   "cosine":   v0 = v_mean + v_amp cos(pi x), theta0 = theta_mean + theta_amp cos(pi x),
///               no-slip u0 = u_amp sin(pi x)
///   "constant": v0 = v_mean, theta0 = theta_mean, no-slip u0 = 0
struct ProfileSpec {
  std::string name = "cosine";
  double v_mean = 1.0;
  double v_amp = 0.2;
  double theta_mean = 1.0;
  double theta_amp = 0.1;
  double u_amp = 0.0;
};

InitialProfile make_profile(const ProfileSpec& spec);

struct Scenario {
  MaterialParams params;
  BoundaryKind bc = BoundaryKind::StressFree;
  ProfileSpec profile;
  std::size_t n_cells = 128;
  double cfl = 0.5;
  double t_end = 0.5;
  double dt_min = 1e-10;
  double output_every = 0.05;
  std::optional<double> dt;         // fixed step; CFL control when absent
  std::optional<std::string> mms;   // manufactured-solution name
  int max_picard = 50;
  double picard_tol = 1e-11;
  int max_coupling_passes = 30;
  double coupling_tol = 1e-10;

  /// Throws ConfigError naming the violated invariant.
  void validate() const;

  StepControls controls() const;
  Problem problem() const;
};

/// Parses the JSON configuration. Unknown keys are rejected; errors carry
/// the offending key or the line of the syntax error.
Scenario parse_config(const std::string& text);
Scenario load_config(const std::string& path);

/// Serializes a scenario back to the configuration format.
std::string to_config(const Scenario& scenario);

/// Initial state of the scenario: the profile made compatible with the
/// boundary family, or the manufactured solution at t = 0.
State initial_state(const Scenario& scenario, const Grid& grid);

}  // namespace lagns
