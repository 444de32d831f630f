#pragma once

#include <string>
#include <vector>

#include "lagns/constitutive.hpp"
#include "lagns/grid.hpp"

namespace lagns {

enum class TimeShape { One, Decay, SinPi, Linear };
enum class SpaceShape { One, CosPi, SinPi };

/// Closed-form field base + amp * T(t) * X(x) with analytic derivatives.
struct SeparableField {
  double base = 0.0;
  double amp = 0.0;
  TimeShape time = TimeShape::One;
  SpaceShape space = SpaceShape::One;

  double value(double x, double t) const;
  double dt(double x, double t) const;
  double dx(double x, double t) const;
  double dxx(double x, double t) const;
};

/// Manufactured triple (v*, u*, theta*).
struct MmsCase {
  std::string name;
  SeparableField v;
  SeparableField u;
  SeparableField theta;
};

/// "default": v* = theta* = 1 + 0.1 e^-t cos(pi x), u* = 0.1 sin(pi t) sin(pi x).
/// "steady":  v* = theta* = 1, u* = 0 (exact solution, zero sources).
/// "heating": v* = 1, u* = 0, theta* = 1 + t.
/// Throws std::invalid_argument for unknown names.
MmsCase mms_case_by_name(const std::string& name);

/// True when every source vanishes identically (the triple solves the equations).
bool mms_is_exact(const MmsCase& mms, const MaterialParams& params);

/// Residuals of the continuity, momentum and temperature equations at one point.
double mms_source_v(const MmsCase& mms, double x, double t);
double mms_source_u(const MmsCase& mms, const MaterialParams& params, double x, double t);
double mms_source_theta(const MmsCase& mms, const MaterialParams& params, double x, double t);

/// Manufactured total stress, imposed as boundary data for stress-free runs.
double mms_stress(const MmsCase& mms, const MaterialParams& params, double x, double t);

struct MmsSources {
  std::vector<double> v;      // cells
  std::vector<double> u;      // nodes
  std::vector<double> theta;  // cells
};

MmsSources mms_sources(const MmsCase& mms, const MaterialParams& params, const Grid& grid, double t);

/// Samples the manufactured solution on the grid at time t.
State mms_state(const MmsCase& mms, const Grid& grid, double t);

}  // namespace lagns
