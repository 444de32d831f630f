#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace lagns {

class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solves the tridiagonal system with sub-diagonal `lower` (length n-1),
/// diagonal `diag` (length n) and super-diagonal `upper` (length n-1)
/// by forward elimination and back substitution (Thomas algorithm).
/// No pivoting: intended for diagonally dominant systems.
std::vector<double> tridiagonal_solve(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs);

}  // namespace lagns
