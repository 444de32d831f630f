#include "lagns/constitutive.hpp"

#include <cmath>

namespace lagns {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0)) {
    throw DomainError(std::string(what) + " must be positive, got " + std::to_string(value));
  }
}

}  // namespace

void MaterialParams::validate() const {
  require_positive(R, "R");
  require_positive(c_v, "c_v");
  require_positive(mu_tilde, "mu_tilde");
  require_positive(kappa_tilde, "kappa_tilde");
  if (!(alpha >= 0.0)) {
    throw DomainError("alpha must satisfy alpha >= 0, got " + std::to_string(alpha));
  }
  if (!(beta > 0.0)) {
    throw DomainError("beta must satisfy beta > 0 (degenerate conductivity regime), got " +
                      std::to_string(beta));
  }
}

double inverse_power(double v, double alpha) {
  require_positive(v, "specific volume");
  if (alpha == 0.0) return 1.0;
  return std::exp(-alpha * std::log(v));
}

double viscosity(double v, const MaterialParams& p) {
  return p.mu_tilde * (1.0 + inverse_power(v, p.alpha));
}

double conductivity(double theta, const MaterialParams& p) {
  require_positive(theta, "temperature");
  return p.kappa_tilde * std::pow(theta, p.beta);
}

double pressure(double v, double theta, const MaterialParams& p) {
  require_positive(v, "specific volume");
  require_positive(theta, "temperature");
  return p.R * theta / v;
}

double stress(double v, double theta, double du_dx, const MaterialParams& p) {
  return viscosity(v, p) * du_dx / v - pressure(v, theta, p);
}

double k_alpha(double alpha) {
  if (!(alpha >= 0.0)) {
    throw DomainError("k(alpha) requires alpha >= 0, got " + std::to_string(alpha));
  }
  return alpha > 0.0 ? 1.0 : 0.5;
}

double sound_speed(double v, double theta, const MaterialParams& p) {
  require_positive(v, "specific volume");
  if (!(theta >= 0.0)) {
    throw DomainError("temperature must be non-negative, got " + std::to_string(theta));
  }
  const double gamma = 1.0 + p.R / p.c_v;
  return std::sqrt(gamma * p.R * theta);
}

double viscous_coefficient_dv(double v, const MaterialParams& p) {
  // mu/v = mu_tilde (v^-1 + v^-1-alpha)
  return -p.mu_tilde * (1.0 + (1.0 + p.alpha) * inverse_power(v, p.alpha)) / (v * v);
}

}  // namespace lagns
