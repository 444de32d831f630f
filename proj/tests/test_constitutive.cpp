#include <doctest.h>

#include <cmath>
#include <random>

#include "lagns/constitutive.hpp"

using namespace lagns;

TEST_CASE("viscosity examples") {
  MaterialParams p;
  p.alpha = 2.0;
  CHECK(viscosity(1.0, p) == 2.0);
  p.alpha = 0.0;
  CHECK(viscosity(5.0, p) == 2.0);
  CHECK(viscosity(1e-8, p) == 2.0);
  p.alpha = 1.0;
  CHECK(viscosity(2.0, p) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK_THROWS_AS(viscosity(0.0, p), DomainError);
  CHECK_THROWS_AS(viscosity(-1.0, p), DomainError);
}

TEST_CASE("conductivity examples") {
  MaterialParams p;
  p.beta = 3.0;
  CHECK(conductivity(1.0, p) == 1.0);
  p.beta = 0.5;
  CHECK(conductivity(4.0, p) == doctest::Approx(2.0).epsilon(1e-15));
  p.beta = 1.0;
  p.kappa_tilde = 3.0;
  CHECK(conductivity(2.0, p) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK_THROWS_AS(conductivity(0.0, p), DomainError);
}

TEST_CASE("pressure examples") {
  MaterialParams p;
  CHECK(pressure(1.0, 1.0, p) == 1.0);
  CHECK(pressure(2.0, 1.0, p) == 0.5);
  p.R = 287.0;
  CHECK(pressure(0.5, 300.0, p) == doctest::Approx(172200.0).epsilon(1e-15));
  CHECK_THROWS_AS(pressure(0.0, 1.0, p), DomainError);
  CHECK_THROWS_AS(pressure(1.0, 0.0, p), DomainError);
}

TEST_CASE("stress examples") {
  MaterialParams p;
  CHECK(stress(1.0, 1.0, 0.0, p) == -1.0);
  CHECK(stress(1.0, 1.0, 1.0, p) == doctest::Approx(1.0).epsilon(1e-15));
  // Compatibility balance: u_x = R theta / mu(v) cancels the pressure.
  for (double v : {0.3, 1.0, 2.7}) {
    for (double th : {0.5, 1.0, 4.0}) {
      const double g = p.R * th / viscosity(v, p);
      CHECK(std::abs(stress(v, th, g, p)) < 1e-14 * pressure(v, th, p));
    }
  }
}

TEST_CASE("k_alpha is the two-point weight") {
  CHECK(k_alpha(0.0) == 0.5);
  CHECK(k_alpha(1.0) == 1.0);
  CHECK(k_alpha(0.3) == 1.0);
  CHECK_THROWS_AS(k_alpha(-0.1), DomainError);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(1e-9, 50.0);
  for (int i = 0; i < 1000; ++i) CHECK(k_alpha(dist(rng)) == 1.0);
}

TEST_CASE("sound speed examples") {
  MaterialParams p;
  CHECK(sound_speed(1.0, 1.0, p) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(sound_speed(1.0, 0.0, p) == 0.0);
  p.c_v = 1.5;
  CHECK(sound_speed(1.0, 2.0, p) == doctest::Approx(std::sqrt(5.0 / 3.0 * 2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(sound_speed(0.0, 1.0, p), DomainError);
}

TEST_CASE("material parameter validation") {
  MaterialParams p;
  CHECK_NOTHROW(p.validate());
  p.alpha = 0.0;
  CHECK_NOTHROW(p.validate());
  p.beta = 0.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = {};
  p.alpha = -1.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  for (auto field : {&MaterialParams::R, &MaterialParams::c_v, &MaterialParams::mu_tilde,
                     &MaterialParams::kappa_tilde}) {
    MaterialParams q;
    q.*field = 0.0;
    CHECK_THROWS_AS(q.validate(), DomainError);
  }
}

TEST_CASE("viscosity properties over random samples") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> vd(0.05, 20.0);
  std::uniform_real_distribution<double> ad(0.0, 4.0);
  for (int i = 0; i < 2000; ++i) {
    MaterialParams p;
    p.alpha = ad(rng);
    p.mu_tilde = 0.5 + ad(rng);
    const double v = vd(rng);
    const double mu = viscosity(v, p);
    CHECK(mu > p.mu_tilde);
    CHECK(mu >= p.mu_tilde * inverse_power(v, p.alpha));
    CHECK(mu * v == doctest::Approx(p.mu_tilde * (v + std::pow(v, 1.0 - p.alpha))).epsilon(1e-12));
    // Non-increasing in v.
    CHECK(viscosity(v * 1.01, p) <= mu);
    // Stress is affine in u_x with slope mu / v.
    const double th = 0.1 + vd(rng);
    const double s0 = stress(v, th, 0.0, p);
    const double s1 = stress(v, th, 1.0, p);
    const double s3 = stress(v, th, 3.0, p);
    CHECK(s1 - s0 == doctest::Approx(mu / v).epsilon(1e-12));
    CHECK(s3 - s1 == doctest::Approx(2.0 * (s1 - s0)).epsilon(1e-12));
  }
}

TEST_CASE("inverse power and viscous coefficient derivative") {
  CHECK(inverse_power(3.7, 0.0) == 1.0);
  CHECK(inverse_power(4.0, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  MaterialParams p;
  for (double alpha : {0.0, 0.5, 1.0, 2.5}) {
    p.alpha = alpha;
    for (double v : {0.4, 1.0, 3.0}) {
      const double h = 1e-6 * v;
      const double fd = (viscosity(v + h, p) / (v + h) - viscosity(v - h, p) / (v - h)) / (2.0 * h);
      CHECK(viscous_coefficient_dv(v, p) == doctest::Approx(fd).epsilon(1e-7));
    }
  }
}
