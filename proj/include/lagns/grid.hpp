#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "lagns/constitutive.hpp"

namespace lagns {

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Uniform staggered grid on the unit mass interval (0,1).
/// Cells i = 0..N-1 have centers (i + 1/2) dx; nodes j = 0..N sit at j dx.
class Grid {
 public:
  explicit Grid(std::size_t n_cells);

  std::size_t n_cells() const { return n_cells_; }
  std::size_t n_nodes() const { return n_cells_ + 1; }
  double dx() const { return dx_; }
  double cell_center(std::size_t i) const { return (static_cast<double>(i) + 0.5) * dx_; }
  double node(std::size_t j) const { return static_cast<double>(j) * dx_; }

 private:
  std::size_t n_cells_;
  double dx_;
};

/// Discrete solution: v and theta at cell centers, u at nodes.
struct State {
  double t = 0.0;
  std::vector<double> v;
  std::vector<double> u;
  std::vector<double> theta;

  /// Throws ShapeError on length mismatch, DomainError on non-positive v or theta.
  void validate(const Grid& grid) const;
};

/// Midpoint rule dx * sum(field).
double cell_integral(std::span<const double> field, const Grid& grid);

/// (u_{i+1} - u_i) / dx for every cell i.
std::vector<double> du_dx_cells(std::span<const double> u, const Grid& grid);

/// dx * sum over interior nodes of ((f_{i+1} - f_i)/dx)^2. End differences are
/// omitted because both boundary families impose a zero normal gradient.
double grad_l2_sq(std::span<const double> field, const Grid& grid);

/// c_v * int theta + 1/2 int u^2, the kinetic part with trapezoidal node weights.
double total_energy(const State& state, const Grid& grid, const MaterialParams& params);

/// Trapezoidal cumulative integral of (u - u0) from 0 to every node; 0 at node 0.
std::vector<double> cumulative_u_integral(std::span<const double> u, std::span<const double> u0,
                                          const Grid& grid);

double field_min(std::span<const double> field);
double field_max(std::span<const double> field);

/// Trapezoidal node weight (1/2 at the ends, 1 inside).
inline double node_weight(std::size_t j, std::size_t n_nodes) {
  return (j == 0 || j + 1 == n_nodes) ? 0.5 : 1.0;
}

}  // namespace lagns
