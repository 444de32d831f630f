#include "lagns/scheme.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "lagns/tridiagonal.hpp"

namespace lagns {

std::string to_string(BoundaryKind bc) {
  return bc == BoundaryKind::StressFree ? "stress_free" : "no_slip";
}

void StepControls::validate() const {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("cfl must lie in (0, 1]");
  if (!(dt_min > 0.0)) throw std::invalid_argument("dt_min must be positive");
  if (max_picard < 1) throw std::invalid_argument("max_picard must be at least 1");
  if (!(picard_tol > 0.0)) throw std::invalid_argument("picard_tol must be positive");
  if (max_coupling_passes < 1) throw std::invalid_argument("max_coupling_passes must be at least 1");
  if (!(coupling_tol > 0.0)) throw std::invalid_argument("coupling_tol must be positive");
}

namespace {

// 3-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 3> kGaussNodes = {-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr std::array<double, 3> kGaussWeights = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

void check_profile_positive(const std::function<double(double)>& f, const char* what) {
  constexpr int kSamples = 2048;
  for (int k = 0; k <= kSamples; ++k) {
    const double x = static_cast<double>(k) / kSamples;
    const double value = f(x);
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw ProfileError(std::string(what) + " must be strictly positive on [0,1]; got " +
                         std::to_string(value) + " at x = " + std::to_string(x));
    }
  }
}

void check_neumann_ends(const std::function<double(double)>& theta0) {
  constexpr double h = 1e-6;
  const double scale = std::max(1.0, std::abs(theta0(0.5)));
  const double left = (theta0(h) - theta0(0.0)) / h;
  const double right = (theta0(1.0) - theta0(1.0 - h)) / h;
  const double tol = 1e-4 * scale;
  if (std::abs(left) > tol || std::abs(right) > tol) {
    throw ProfileError("initial temperature must satisfy theta0'(0) = theta0'(1) = 0 (insulated ends); "
                       "slopes are " + std::to_string(left) + " and " + std::to_string(right));
  }
}

bool all_positive_finite(std::span<const double> f) {
  return std::all_of(f.begin(), f.end(), [](double x) { return x > 0.0 && std::isfinite(x); });
}

// max|a - b| / max|a|, with an absolute floor for fields that vanish identically.
double relative_change(std::span<const double> a, std::span<const double> b) {
  double change = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    change = std::max(change, std::abs(a[i] - b[i]));
    scale = std::max(scale, std::abs(a[i]));
  }
  return change / std::max(scale, 1e-300);
}

}  // namespace

State compatible_initial_data(const InitialProfile& profile, const MaterialParams& params,
                              BoundaryKind bc, const Grid& grid) {
  params.validate();
  if (!profile.v0 || !profile.theta0) throw ProfileError("profile needs v0 and theta0");
  check_profile_positive(profile.v0, "initial specific volume v0");
  check_profile_positive(profile.theta0, "initial temperature theta0");
  check_neumann_ends(profile.theta0);

  State s;
  s.t = 0.0;
  s.v.resize(grid.n_cells());
  s.theta.resize(grid.n_cells());
  s.u.assign(grid.n_nodes(), 0.0);
  for (std::size_t i = 0; i < grid.n_cells(); ++i) {
    s.v[i] = profile.v0(grid.cell_center(i));
    s.theta[i] = profile.theta0(grid.cell_center(i));
  }

  if (bc == BoundaryKind::StressFree) {
    const auto balance = [&](double x) {
      return params.R * profile.theta0(x) / viscosity(profile.v0(x), params);
    };
    const double half = 0.5 * grid.dx();
    for (std::size_t j = 1; j < grid.n_nodes(); ++j) {
      const double mid = grid.node(j - 1) + half;
      double cell = 0.0;
      for (std::size_t q = 0; q < kGaussNodes.size(); ++q) {
        cell += kGaussWeights[q] * balance(mid + half * kGaussNodes[q]);
      }
      s.u[j] = s.u[j - 1] + half * cell;
    }
  } else {
    if (profile.u0) {
      const double tol = 1e-12;
      if (std::abs(profile.u0(0.0)) > tol || std::abs(profile.u0(1.0)) > tol) {
        throw ProfileError("no-slip initial velocity must vanish at both ends");
      }
      for (std::size_t j = 1; j + 1 < grid.n_nodes(); ++j) s.u[j] = profile.u0(grid.node(j));
    }
  }
  return s;
}

std::vector<double> cell_stress(const State& state, const Grid& grid, const MaterialParams& params) {
  const auto ux = du_dx_cells(state.u, grid);
  std::vector<double> sigma(grid.n_cells());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    sigma[i] = stress(state.v[i], state.theta[i], ux[i], params);
  }
  return sigma;
}

std::pair<double, double> boundary_stress_extrapolation(std::span<const double> sigma) {
  const std::size_t n = sigma.size();
  if (n < 3) throw ShapeError("stress extrapolation needs at least three cells");
  // Quadratic through the three cells nearest each end, evaluated at the end node.
  return {1.875 * sigma[0] - 1.25 * sigma[1] + 0.375 * sigma[2],
          1.875 * sigma[n - 1] - 1.25 * sigma[n - 2] + 0.375 * sigma[n - 3]};
}

CompatibilityResidual compatibility_residual(const State& state, const Grid& grid,
                                             const MaterialParams& params, BoundaryKind bc) {
  state.validate(grid);
  CompatibilityResidual r;
  if (bc == BoundaryKind::StressFree) {
    const auto sigma = cell_stress(state, grid, params);
    const auto [left, right] = boundary_stress_extrapolation(sigma);
    r.left = std::abs(left);
    r.right = std::abs(right);
  } else {
    r.left = std::abs(state.u.front());
    r.right = std::abs(state.u.back());
  }

  const auto& th = state.theta;
  const std::size_t n = th.size();
  const double dx = grid.dx();
  if (n >= 3) {
    r.theta_x_left = std::abs(-2.0 * th[0] + 3.0 * th[1] - th[2]) / dx;
    r.theta_x_right = std::abs(2.0 * th[n - 1] - 3.0 * th[n - 2] + th[n - 3]) / dx;
  } else {
    r.theta_x_left = r.theta_x_right = std::abs(th[1] - th[0]) / dx;
  }
  return r;
}

double dt_control(const State& state, const Grid& grid, const MaterialParams& params,
                  const StepControls& controls) {
  double limit = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < state.v.size(); ++i) {
    if (!std::isfinite(state.v[i]) || !std::isfinite(state.theta[i])) {
      throw SolverAbort("non-finite field value in cell " + std::to_string(i));
    }
    const double c = sound_speed(state.v[i], state.theta[i], params);
    if (c > 0.0) limit = std::min(limit, grid.dx() * state.v[i] / c);
  }
  return std::max(controls.cfl * limit, controls.dt_min);
}

std::vector<double> momentum_step(const State& state, double dt, const Grid& grid,
                                  const MaterialParams& params, BoundaryKind bc,
                                  std::pair<double, double> boundary_stress,
                                  std::span<const double> source, const State* coefficients) {
  const State& coef = coefficients ? *coefficients : state;
  const std::size_t nc = grid.n_cells();
  const std::size_t nn = grid.n_nodes();
  const double dx = grid.dx();
  const double r = dt / dx;

  // sigma_i = a_i (u_{i+1} - u_i) - P_i
  std::vector<double> a(nc), p(nc);
  for (std::size_t i = 0; i < nc; ++i) {
    a[i] = viscosity(coef.v[i], params) / (coef.v[i] * dx);
    p[i] = pressure(coef.v[i], coef.theta[i], params);
  }

  std::vector<double> lower(nn - 1, 0.0), diag(nn, 1.0), upper(nn - 1, 0.0), rhs(nn, 0.0);
  for (std::size_t j = 1; j + 1 < nn; ++j) {
    lower[j - 1] = -r * a[j - 1];
    upper[j] = -r * a[j];
    diag[j] = 1.0 + r * (a[j - 1] + a[j]);
    rhs[j] = state.u[j] - r * (p[j] - p[j - 1]);
  }

  if (bc == BoundaryKind::StressFree) {
    // Half-cell control volumes at the ends with the imposed boundary stress.
    const double r2 = 2.0 * r;
    diag[0] = 1.0 + r2 * a[0];
    upper[0] = -r2 * a[0];
    rhs[0] = state.u[0] - r2 * (p[0] + boundary_stress.first);

    diag[nn - 1] = 1.0 + r2 * a[nc - 1];
    lower[nn - 2] = -r2 * a[nc - 1];
    rhs[nn - 1] = state.u[nn - 1] + r2 * (boundary_stress.second + p[nc - 1]);
  } else {
    rhs[0] = 0.0;
    rhs[nn - 1] = 0.0;
  }

  if (!source.empty()) {
    for (std::size_t j = 0; j < nn; ++j) {
      if (bc == BoundaryKind::NoSlip && (j == 0 || j + 1 == nn)) continue;
      rhs[j] += dt * source[j];
    }
  }

  try {
    return tridiagonal_solve(lower, diag, upper, rhs);
  } catch (const SingularSystem& e) {
    throw std::logic_error(std::string("momentum system singular: ") + e.what());
  }
}

std::vector<double> continuity_step(const State& state, std::span<const double> new_u, double dt,
                                    const Grid& grid, std::span<const double> source) {
  const auto ux = du_dx_cells(new_u, grid);
  std::vector<double> v(state.v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = state.v[i] + dt * (ux[i] + (source.empty() ? 0.0 : source[i]));
  }
  return v;
}

TemperatureResult temperature_step(const State& state, std::span<const double> new_u,
                                   std::span<const double> new_v, double dt, const Grid& grid,
                                   const MaterialParams& params, const StepControls& controls,
                                   std::span<const double> source, std::span<const double> heating_v) {
  const std::span<const double> hv = heating_v.empty() ? std::span<const double>(state.v) : heating_v;
  const std::size_t nc = grid.n_cells();
  const double dx2 = grid.dx() * grid.dx();
  const auto ux = du_dx_cells(new_u, grid);

  std::vector<double> base_diag(nc), rhs(nc);
  for (std::size_t i = 0; i < nc; ++i) {
    const double heating = viscosity(hv[i], params) / hv[i] * ux[i] * ux[i];
    base_diag[i] = params.c_v / dt + params.R * ux[i] / new_v[i];
    rhs[i] = params.c_v * state.theta[i] / dt + heating + (source.empty() ? 0.0 : source[i]);
  }

  TemperatureResult result;
  std::vector<double> iterate = state.theta;
  std::vector<double> face(nc - 1), lower(nc - 1), upper(nc - 1), diag(nc);
  for (int m = 0; m < controls.max_picard; ++m) {
    for (std::size_t i = 0; i + 1 < nc; ++i) {
      const double k_face = 0.5 * (conductivity(iterate[i], params) + conductivity(iterate[i + 1], params));
      const double v_face = 0.5 * (new_v[i] + new_v[i + 1]);
      face[i] = k_face / (v_face * dx2);
    }
    for (std::size_t i = 0; i < nc; ++i) {
      const double left = i > 0 ? face[i - 1] : 0.0;
      const double right = i + 1 < nc ? face[i] : 0.0;
      diag[i] = base_diag[i] + left + right;
      if (i > 0) lower[i - 1] = -left;
      if (i + 1 < nc) upper[i] = -right;
    }

    std::vector<double> next;
    try {
      next = tridiagonal_solve(lower, diag, upper, rhs);
    } catch (const SingularSystem&) {
      result.theta = std::move(iterate);
      result.picard_iterations = m + 1;
      return result;
    }
    result.picard_iterations = m + 1;

    if (!all_positive_finite(next)) {
      result.theta = std::move(next);
      return result;
    }
    double change = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < nc; ++i) {
      change = std::max(change, std::abs(next[i] - iterate[i]));
      scale = std::max(scale, std::abs(next[i]));
    }
    iterate = std::move(next);
    if (change <= controls.picard_tol * scale) {
      result.converged = true;
      break;
    }
  }
  result.theta = std::move(iterate);
  return result;
}

StepResult step(const State& state, double dt, const Grid& grid, const Problem& problem) {
  const auto& params = problem.params;
  StepResult out;
  double trial = dt;
  while (true) {
    if (trial < problem.controls.dt_min) {
      throw SolverAbort("step size fell below dt_min = " + std::to_string(problem.controls.dt_min) +
                        " at t = " + std::to_string(state.t) +
                        " (positivity or temperature solve failure)");
    }
    const double t_new = state.t + trial;

    std::optional<MmsSources> src;
    std::pair<double, double> boundary_stress{0.0, 0.0};
    if (problem.mms) {
      src = mms_sources(*problem.mms, params, grid, t_new);
      if (problem.bc == BoundaryKind::StressFree) {
        boundary_stress = {mms_stress(*problem.mms, params, 0.0, t_new),
                           mms_stress(*problem.mms, params, 1.0, t_new)};
      }
    }
    const std::span<const double> s_u = src ? std::span<const double>(src->u) : std::span<const double>{};
    const std::span<const double> s_v = src ? std::span<const double>(src->v) : std::span<const double>{};
    const std::span<const double> s_th =
        src ? std::span<const double>(src->theta) : std::span<const double>{};

    std::vector<double> u, v;
    TemperatureResult temp;
    bool rejected = false;
    bool coupled = problem.controls.max_coupling_passes == 1;
    for (int pass = 0; pass < problem.controls.max_coupling_passes; ++pass) {
      State coef;
      if (pass > 0) {
        coef.u = u;
        coef.v = v;
        coef.theta = temp.theta;
      }
      u = momentum_step(state, trial, grid, params, problem.bc, boundary_stress, s_u,
                        pass > 0 ? &coef : nullptr);
      v = continuity_step(state, u, trial, grid, s_v);
      const bool u_finite = std::all_of(u.begin(), u.end(), [](double x) { return std::isfinite(x); });
      if (!u_finite || !all_positive_finite(v)) {
        rejected = true;
        break;
      }
      temp = temperature_step(state, u, v, trial, grid, params, problem.controls, s_th,
                              pass > 0 ? std::span<const double>(coef.v) : std::span<const double>{});
      out.picard_iterations += temp.picard_iterations;
      out.coupling_passes = pass + 1;
      if (!temp.converged || !all_positive_finite(temp.theta)) {
        rejected = true;
        break;
      }
      if (pass > 0) {
        const double tol = problem.controls.coupling_tol;
        if (relative_change(u, coef.u) <= tol && relative_change(v, coef.v) <= tol &&
            relative_change(temp.theta, coef.theta) <= tol) {
          coupled = true;
          break;
        }
      }
    }
    if (!coupled) rejected = true;
    if (rejected) {
      trial *= 0.5;
      ++out.rejections;
      continue;
    }

    out.state.t = t_new;
    out.state.u = std::move(u);
    out.state.v = std::move(v);
    out.state.theta = std::move(temp.theta);
    out.dt = trial;
    return out;
  }
}

}  // namespace lagns
