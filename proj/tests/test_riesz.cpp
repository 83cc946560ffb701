#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hardylab/density.hpp"
#include "hardylab/riesz.hpp"

using namespace hardylab;
using std::numbers::pi;

namespace {

RadialDensity unit_gaussian(int d, std::size_t n) {
  return RadialDensity::from_function(d, RadialDensity::log_grid(n, 1e-3, 12.0), [d](double r) {
    return std::exp(-0.5 * r * r) * std::pow(2.0 * pi, -0.5 * d);
  });
}

}  // namespace

TEST_CASE("radial density integrals") {
  const auto rho = unit_gaussian(3, 800);
  CHECK(rho.mass() == doctest::Approx(1.0).epsilon(1e-4));
  // int g^2 = (4 pi)^{-d/2} for the standard normal density
  CHECK(rho.lp_integral(2.0) == doctest::Approx(std::pow(4.0 * pi, -1.5)).epsilon(1e-4));
  const auto t = rho.dilated(2.0);
  CHECK(t.mass() == doctest::Approx(rho.mass()).epsilon(1e-12));
}

TEST_CASE("Coulomb self-energy of a Gaussian") {
  // D_1 = 1 / (2 sqrt(pi) sigma) in three dimensions
  const auto rho = unit_gaussian(3, 400);
  const double D = riesz_energy(rho, RieszKernel(3, 1.0));
  CHECK(D == doctest::Approx(0.5 / std::sqrt(pi)).epsilon(2e-4));
}

TEST_CASE("Cartesian Riesz energy in the plane") {
  // X - Y ~ N(0, 2 I_2): E|X - Y|^-1 = sqrt(pi) / 2, so D = sqrt(pi) / 4
  const std::size_t n = 64;
  const double half = 6.0, h = 2.0 * half / n;
  const auto rho = CartesianDensity::sample(2, n, h, -half, [](std::span<const double> x) {
    return std::exp(-0.5 * (x[0] * x[0] + x[1] * x[1])) / (2.0 * pi);
  });
  const double D = riesz_energy(rho.scaled(1.0 / rho.mass()), RieszKernel(2, 1.0));
  CHECK(D == doctest::Approx(std::sqrt(pi) / 4.0).epsilon(5e-3));
}

TEST_CASE("cell pair kernel approaches the point kernel far away") {
  const int far[] = {30, 0, 0};
  CHECK(cell_pair_kernel(3, 1.0, far) == doctest::Approx(1.0 / 30.0).epsilon(1e-3));
}

TEST_CASE("ball decomposition rebuilds the kernel") {
  for (auto [d, lam] : {std::pair{3, 1.0}, {3, 2.0}, {1, 0.5}, {2, 1.0}}) {
    const RieszKernel k(d, lam);
    std::vector<double> y(d, 0.0), yp(d, 0.0);
    for (double r = 0.05; r < 50.0; r *= 1.9) {
      yp[0] = r;
      CHECK(fdll_reconstruct(y, yp, k) == doctest::Approx(std::pow(r, -lam)).epsilon(1e-3));
    }
  }
}

TEST_CASE("sublevel volume against the exact union of two balls") {
  const PointConfig R(3, {{0.0, 0.0, 0.0}, {0.8, 0.0, 0.0}});
  const double t = 0.6;
  const double ball = 4.0 * pi / 3.0 * t * t * t;
  const double D = 0.8;
  const double lens = pi * (4.0 * t + D) * (2.0 * t - D) * (2.0 * t - D) / 12.0;
  Rng rng(17);
  const auto v = sublevel_volume(R, t, 200000, rng);
  CHECK(v.bound == doctest::Approx(2.0 * ball));
  CHECK(v.measured <= v.bound);
  CHECK(std::abs(v.measured - (2.0 * ball - lens)) < 5.0 * v.std_error + 1e-12);
  // a single ball is counted exactly
  const PointConfig one(3, {{0.0, 0.0, 0.0}});
  const auto w = sublevel_volume(one, t, 1000, rng);
  CHECK(w.measured == doctest::Approx(w.bound).epsilon(1e-14));
}

TEST_CASE("pair interaction") {
  const PointConfig X(1, {{0.0}, {1.0}, {3.0}});
  CHECK(pair_interaction(X, RieszKernel(1, 0.5)) == doctest::Approx(1.0 + 1.0 / std::sqrt(3.0) + 1.0 / std::sqrt(2.0)));
  const PointConfig dup(1, {{0.0}, {0.0}});
  CHECK_THROWS_AS(pair_interaction(dup, RieszKernel(1, 0.5)), ParamError);
}
