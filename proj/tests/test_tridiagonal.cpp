#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "lagns/tridiagonal.hpp"

using namespace lagns;

namespace {

// Dense Gaussian elimination with partial pivoting.
std::vector<double> dense_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(a[r][k]) > std::abs(a[piv][k])) piv = r;
    }
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = a[r][k] / a[k][k];
      for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
      b[r] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t k = n; k-- > 0;) {
    double s = b[k];
    for (std::size_t c = k + 1; c < n; ++c) s -= a[k][c] * x[c];
    x[k] = s / a[k][k];
  }
  return x;
}

}  // namespace

TEST_CASE("identity returns rhs") {
  const std::vector<double> lo(4, 0.0), up(4, 0.0), d(5, 1.0), rhs{1, -2, 3, 0.5, 7};
  CHECK(tridiagonal_solve(lo, d, up, rhs) == rhs);
}

TEST_CASE("2x2 symmetric") {
  const auto x = tridiagonal_solve(std::vector<double>{1}, std::vector<double>{2, 2},
                                   std::vector<double>{1}, std::vector<double>{3, 3});
  CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("random diagonally dominant 50x50 against dense elimination") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  constexpr std::size_t n = 50;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> lo(n - 1), up(n - 1), dg(n), rhs(n);
    std::vector<std::vector<double>> dense(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      lo[i] = d(rng);
      up[i] = d(rng);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double off = (i > 0 ? std::abs(lo[i - 1]) : 0.0) + (i + 1 < n ? std::abs(up[i]) : 0.0);
      dg[i] = (d(rng) < 0 ? -1.0 : 1.0) * (off + 0.1 + std::abs(d(rng)));
      rhs[i] = 10.0 * d(rng);
      dense[i][i] = dg[i];
      if (i > 0) dense[i][i - 1] = lo[i - 1];
      if (i + 1 < n) dense[i][i + 1] = up[i];
    }
    const auto x = tridiagonal_solve(lo, dg, up, rhs);
    const auto y = dense_solve(dense, rhs);
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(x[i] - y[i]));
    CHECK(diff < 1e-12);
  }
}

TEST_CASE("zero pivot and shape errors") {
  CHECK_THROWS_AS(tridiagonal_solve(std::vector<double>{1}, std::vector<double>{0, 1},
                                    std::vector<double>{1}, std::vector<double>{1, 1}),
                  SingularSystem);
  CHECK_THROWS(tridiagonal_solve(std::vector<double>{1, 1}, std::vector<double>{1, 1},
                                 std::vector<double>{1}, std::vector<double>{1, 1}));
}
