#include "lagns/mms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lagns {

namespace {

constexpr double kPi = std::numbers::pi;

double time_value(TimeShape s, double t) {
  switch (s) {
    case TimeShape::One: return 1.0;
    case TimeShape::Decay: return std::exp(-t);
    case TimeShape::SinPi: return std::sin(kPi * t);
    case TimeShape::Linear: return t;
  }
  return 0.0;
}

double time_deriv(TimeShape s, double t) {
  switch (s) {
    case TimeShape::One: return 0.0;
    case TimeShape::Decay: return -std::exp(-t);
    case TimeShape::SinPi: return kPi * std::cos(kPi * t);
    case TimeShape::Linear: return 1.0;
  }
  return 0.0;
}

double space_value(SpaceShape s, double x) {
  switch (s) {
    case SpaceShape::One: return 1.0;
    case SpaceShape::CosPi: return std::cos(kPi * x);
    case SpaceShape::SinPi: return std::sin(kPi * x);
  }
  return 0.0;
}

double space_deriv(SpaceShape s, double x) {
  switch (s) {
    case SpaceShape::One: return 0.0;
    case SpaceShape::CosPi: return -kPi * std::sin(kPi * x);
    case SpaceShape::SinPi: return kPi * std::cos(kPi * x);
  }
  return 0.0;
}

double space_deriv2(SpaceShape s, double x) {
  switch (s) {
    case SpaceShape::One: return 0.0;
    case SpaceShape::CosPi: return -kPi * kPi * std::cos(kPi * x);
    case SpaceShape::SinPi: return -kPi * kPi * std::sin(kPi * x);
  }
  return 0.0;
}

}  // namespace

double SeparableField::value(double x, double t) const {
  return base + amp * time_value(time, t) * space_value(space, x);
}
double SeparableField::dt(double x, double t) const {
  return amp * time_deriv(time, t) * space_value(space, x);
}
double SeparableField::dx(double x, double t) const {
  return amp * time_value(time, t) * space_deriv(space, x);
}
double SeparableField::dxx(double x, double t) const {
  return amp * time_value(time, t) * space_deriv2(space, x);
}

MmsCase mms_case_by_name(const std::string& name) {
  if (name == "default") {
    return {name,
            {1.0, 0.1, TimeShape::Decay, SpaceShape::CosPi},
            {0.0, 0.1, TimeShape::SinPi, SpaceShape::SinPi},
            {1.0, 0.1, TimeShape::Decay, SpaceShape::CosPi}};
  }
  if (name == "steady") {
    return {name, {1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}};
  }
  if (name == "heating") {
    return {name, {1.0, 0.0}, {0.0, 0.0}, {1.0, 1.0, TimeShape::Linear, SpaceShape::One}};
  }
  throw std::invalid_argument("unknown manufactured solution '" + name +
                              "' (expected default, steady or heating)");
}

bool mms_is_exact(const MmsCase& mms, const MaterialParams& /*params*/) {
  // Only spatially and temporally constant triples with u* = 0 are exact here.
  return mms.v.amp == 0.0 && mms.u.amp == 0.0 && mms.u.base == 0.0 && mms.theta.amp == 0.0;
}

double mms_source_v(const MmsCase& mms, double x, double t) {
  return mms.v.dt(x, t) - mms.u.dx(x, t);
}

double mms_stress(const MmsCase& mms, const MaterialParams& params, double x, double t) {
  return stress(mms.v.value(x, t), mms.theta.value(x, t), mms.u.dx(x, t), params);
}

double mms_source_u(const MmsCase& mms, const MaterialParams& params, double x, double t) {
  const double v = mms.v.value(x, t);
  const double v_x = mms.v.dx(x, t);
  const double u_x = mms.u.dx(x, t);
  const double u_xx = mms.u.dxx(x, t);
  const double th = mms.theta.value(x, t);
  const double th_x = mms.theta.dx(x, t);

  const double m = viscosity(v, params) / v;
  const double dm = viscous_coefficient_dv(v, params);
  const double sigma_x = dm * v_x * u_x + m * u_xx - params.R * (th_x / v - th * v_x / (v * v));
  return mms.u.dt(x, t) - sigma_x;
}

double mms_source_theta(const MmsCase& mms, const MaterialParams& params, double x, double t) {
  const double v = mms.v.value(x, t);
  const double v_x = mms.v.dx(x, t);
  const double u_x = mms.u.dx(x, t);
  const double th = mms.theta.value(x, t);
  const double th_x = mms.theta.dx(x, t);
  const double th_xx = mms.theta.dxx(x, t);
  const double b = params.beta;

  const double th_b = std::pow(th, b);
  const double flux_x = params.kappa_tilde * (b * std::pow(th, b - 1.0) * th_x * th_x / v +
                                              th_b * th_xx / v - th_b * th_x * v_x / (v * v));
  return params.c_v * mms.theta.dt(x, t) + params.R * th * u_x / v - flux_x -
         viscosity(v, params) * u_x * u_x / v;
}

MmsSources mms_sources(const MmsCase& mms, const MaterialParams& params, const Grid& grid, double t) {
  MmsSources s;
  s.v.resize(grid.n_cells());
  s.theta.resize(grid.n_cells());
  s.u.resize(grid.n_nodes());
  for (std::size_t i = 0; i < grid.n_cells(); ++i) {
    const double x = grid.cell_center(i);
    s.v[i] = mms_source_v(mms, x, t);
    s.theta[i] = mms_source_theta(mms, params, x, t);
  }
  for (std::size_t j = 0; j < grid.n_nodes(); ++j) {
    s.u[j] = mms_source_u(mms, params, grid.node(j), t);
  }
  return s;
}

State mms_state(const MmsCase& mms, const Grid& grid, double t) {
  State s;
  s.t = t;
  s.v.resize(grid.n_cells());
  s.theta.resize(grid.n_cells());
  s.u.resize(grid.n_nodes());
  for (std::size_t i = 0; i < grid.n_cells(); ++i) {
    s.v[i] = mms.v.value(grid.cell_center(i), t);
    s.theta[i] = mms.theta.value(grid.cell_center(i), t);
  }
  for (std::size_t j = 0; j < grid.n_nodes(); ++j) s.u[j] = mms.u.value(grid.node(j), t);
  return s;
}

}  // namespace lagns
