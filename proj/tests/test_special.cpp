#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hardylab/quadrature.hpp"
#include "hardylab/special.hpp"

using namespace hardylab;
using std::numbers::pi;

TEST_CASE("gamma matches the C library") {
  for (double x = 0.05; x < 30.0; x *= 1.37) {
    CHECK(hardylab::gamma(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-13));
    CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  }
  CHECK_THROWS(hardylab::gamma(-1.0));
}

TEST_CASE("Bessel J against libstdc++ special functions") {
  for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0, 3.5}) {
    for (double x = 0.01; x < 80.0; x *= 1.21) {
      const double ref = std::cyl_bessel_j(nu, x);
      CHECK(std::abs(bessel_j(nu, x) - ref) < 1e-12 + 1e-10 * std::abs(ref));
    }
  }
  for (double x : {0.3, 7.0, 19.9, 20.1, 55.0}) CHECK(bessel_j1(x) == doctest::Approx(std::cyl_bessel_j(1.0, x)).epsilon(1e-10));
}

TEST_CASE("incomplete beta special cases and symmetry") {
  for (double x : {0.0, 0.1, 0.37, 0.8, 1.0}) {
    CHECK(incomplete_beta(1.0, 2.5, x) == doctest::Approx(1.0 - std::pow(1.0 - x, 2.5)).epsilon(1e-12));
    CHECK(incomplete_beta(3.0, 1.0, x) == doctest::Approx(std::pow(x, 3.0)).epsilon(1e-12));
    CHECK(incomplete_beta(2.2, 0.7, x) == doctest::Approx(1.0 - incomplete_beta(0.7, 2.2, 1.0 - x)).epsilon(1e-11));
  }
}

TEST_CASE("Kummer function closed forms") {
  for (double x : {0.01, 0.5, 2.0, 10.0, 60.0}) {
    CHECK(hyp1f1_negative(1.0, 2.0, -x) == doctest::Approx(-std::expm1(-x) / x).epsilon(1e-12));
    const double r = std::sqrt(x);
    CHECK(hyp1f1_negative(0.5, 1.5, -x) == doctest::Approx(std::sqrt(pi) * std::erf(r) / (2.0 * r)).epsilon(1e-12));
  }
}

TEST_CASE("ball intersection volumes") {
  const double r = 1.3;
  for (double D : {0.0, 0.4, 1.1, 2.5, 2.6, 3.0}) {
    const double c1 = std::max(0.0, 2.0 * r - D);
    CHECK(ball_intersection_volume(1, r, D) == doctest::Approx(c1));
    const double c2 = D >= 2 * r ? 0.0 : 2.0 * r * r * std::acos(D / (2.0 * r)) - 0.5 * D * std::sqrt(4.0 * r * r - D * D);
    CHECK(ball_intersection_volume(2, r, D) == doctest::Approx(c2).epsilon(1e-12));
    const double c3 = D >= 2 * r ? 0.0 : pi * (4.0 * r + D) * (2.0 * r - D) * (2.0 * r - D) / 12.0;
    CHECK(ball_intersection_volume(3, r, D) == doctest::Approx(c3).epsilon(1e-12));
  }
}

TEST_CASE("Gaussian inverse moments") {
  // d = 3, lambda = 1: E|X|^-1 = erf(a / (sigma sqrt 2)) / a
  for (double a : {0.0, 0.3, 1.0, 4.0, 12.0}) {
    const double sigma = 0.7;
    const double ref = a == 0.0 ? std::sqrt(2.0 / pi) / sigma : std::erf(a / (sigma * std::sqrt(2.0))) / a;
    CHECK(gaussian_inverse_moment(3, 1.0, a, sigma) == doctest::Approx(ref).epsilon(1e-12));
  }
  // d = 1, any lambda < 1: direct quadrature of the density
  const double lam = 0.6, a = 0.8, sigma = 1.2;
  auto f = [&](double x) {
    return std::pow(std::abs(x), -lam) * std::exp(-0.5 * (x - a) * (x - a) / (sigma * sigma)) / (sigma * std::sqrt(2 * pi));
  };
  const double bp[] = {0.0};
  const double ref = integrate(f, -15.0, 15.0, {}, bp);
  CHECK(gaussian_inverse_moment(1, lam, a, sigma) == doctest::Approx(ref).epsilon(1e-9));
}
