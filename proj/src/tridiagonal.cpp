#include "lagns/tridiagonal.hpp"

#include <cmath>
#include <string>

namespace lagns {

std::vector<double> tridiagonal_solve(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs) {
  const std::size_t n = diag.size();
  if (n == 0 || rhs.size() != n || lower.size() + 1 != n || upper.size() + 1 != n) {
    throw std::invalid_argument("tridiagonal_solve: inconsistent band lengths");
  }

  std::vector<double> c(n, 0.0);
  std::vector<double> x(n, 0.0);

  double pivot = diag[0];
  if (pivot == 0.0 || !std::isfinite(pivot)) throw SingularSystem("zero pivot in row 0");
  if (n > 1) c[0] = upper[0] / pivot;
  x[0] = rhs[0] / pivot;

  for (std::size_t i = 1; i < n; ++i) {
    pivot = diag[i] - lower[i - 1] * c[i - 1];
    if (pivot == 0.0 || !std::isfinite(pivot)) {
      throw SingularSystem("zero pivot in row " + std::to_string(i));
    }
    if (i + 1 < n) c[i] = upper[i] / pivot;
    x[i] = (rhs[i] - lower[i - 1] * x[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
  return x;
}

}  // namespace lagns
