#include "lagns/grid.hpp"

#include <algorithm>
#include <string>

namespace lagns {

namespace {

void require_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw ShapeError(std::string(what) + ": expected length " + std::to_string(want) + ", got " +
                     std::to_string(got));
  }
}

}  // namespace

Grid::Grid(std::size_t n_cells) : n_cells_(n_cells), dx_(0.0) {
  if (n_cells < 2) {
    throw ShapeError("grid needs at least 2 cells, got " + std::to_string(n_cells));
  }
  dx_ = 1.0 / static_cast<double>(n_cells);
}

void State::validate(const Grid& grid) const {
  require_length(v.size(), grid.n_cells(), "v");
  require_length(theta.size(), grid.n_cells(), "theta");
  require_length(u.size(), grid.n_nodes(), "u");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0)) throw DomainError("non-positive specific volume in cell " + std::to_string(i));
    if (!(theta[i] > 0.0)) throw DomainError("non-positive temperature in cell " + std::to_string(i));
  }
}

double cell_integral(std::span<const double> field, const Grid& grid) {
  require_length(field.size(), grid.n_cells(), "cell_integral");
  double sum = 0.0;
  for (double f : field) sum += f;
  return grid.dx() * sum;
}

std::vector<double> du_dx_cells(std::span<const double> u, const Grid& grid) {
  require_length(u.size(), grid.n_nodes(), "du_dx_cells");
  std::vector<double> out(grid.n_cells());
  const double inv_dx = 1.0 / grid.dx();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (u[i + 1] - u[i]) * inv_dx;
  return out;
}

double grad_l2_sq(std::span<const double> field, const Grid& grid) {
  require_length(field.size(), grid.n_cells(), "grad_l2_sq");
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < field.size(); ++i) {
    const double g = (field[i + 1] - field[i]) / grid.dx();
    sum += g * g;
  }
  return grid.dx() * sum;
}

double total_energy(const State& state, const Grid& grid, const MaterialParams& params) {
  require_length(state.u.size(), grid.n_nodes(), "total_energy u");
  double kinetic = 0.0;
  for (std::size_t j = 0; j < state.u.size(); ++j) {
    kinetic += node_weight(j, state.u.size()) * state.u[j] * state.u[j];
  }
  return params.c_v * cell_integral(state.theta, grid) + 0.5 * grid.dx() * kinetic;
}

std::vector<double> cumulative_u_integral(std::span<const double> u, std::span<const double> u0,
                                          const Grid& grid) {
  require_length(u.size(), grid.n_nodes(), "cumulative_u_integral u");
  require_length(u0.size(), grid.n_nodes(), "cumulative_u_integral u0");
  std::vector<double> out(grid.n_nodes(), 0.0);
  for (std::size_t j = 1; j < out.size(); ++j) {
    const double left = u[j - 1] - u0[j - 1];
    const double right = u[j] - u0[j];
    out[j] = out[j - 1] + 0.5 * grid.dx() * (left + right);
  }
  return out;
}

double field_min(std::span<const double> field) {
  if (field.empty()) throw ShapeError("field_min of an empty field");
  return *std::min_element(field.begin(), field.end());
}

double field_max(std::span<const double> field) {
  if (field.empty()) throw ShapeError("field_max of an empty field");
  return *std::max_element(field.begin(), field.end());
}

}  // namespace lagns
