#pragma once

#include <stdexcept>
#include <string>

namespace lagns {

/// Raised when a pointwise law is evaluated outside its domain
/// (non-positive volume or temperature, negative exponent, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Gas and transport constants of a polytropic ideal gas with
/// viscosity mu = mu_tilde (1 + v^-alpha) and conductivity
/// kappa = kappa_tilde theta^beta.
///
/// Defaults are the unit normalization R = c_v = mu_tilde = kappa_tilde = 1.
struct MaterialParams {
  double R = 1.0;
  double c_v = 1.0;
  double mu_tilde = 1.0;
  double kappa_tilde = 1.0;
  double alpha = 1.0;
  double beta = 1.0;

  /// Throws DomainError unless R, c_v, mu_tilde, kappa_tilde, beta > 0 and alpha >= 0.
  void validate() const;
};

double viscosity(double v, const MaterialParams& p);
double conductivity(double theta, const MaterialParams& p);
double pressure(double v, double theta, const MaterialParams& p);

/// Total stress mu(v) u_x / v - P(v, theta).
double stress(double v, double theta, double du_dx, const MaterialParams& p);

/// Weight of the volume representation: 1 for alpha > 0, 1/2 for alpha = 0.
double k_alpha(double alpha);

/// Adiabatic sound speed sqrt(gamma R theta), gamma = 1 + R / c_v.
/// Only used for step-size control; theta = 0 is allowed and yields 0.
double sound_speed(double v, double theta, const MaterialParams& p);

/// v^-alpha, with alpha = 0 short-circuited to exactly 1.
double inverse_power(double v, double alpha);

/// Derivative of mu(v)/v with respect to v.
double viscous_coefficient_dv(double v, const MaterialParams& p);

}  // namespace lagns
