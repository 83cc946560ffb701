#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hardylab/coherent.hpp"
#include "hardylab/quadrature.hpp"

using namespace hardylab;
using std::numbers::pi;

namespace {

CartesianDensity gaussian_rho(double mass, std::size_t n, double half) {
  const double h = 2.0 * half / double(n);
  auto rho = CartesianDensity::sample(1, n, h, -half, [&](std::span<const double> x) {
    return mass * std::exp(-0.5 * x[0] * x[0]) / std::sqrt(2.0 * pi);
  });
  return rho.scaled(mass / rho.mass());
}

// E|xi| for xi ~ N(m, sigma^2)
double abs_mean(double m, double sigma) {
  return sigma * std::sqrt(2.0 / pi) * std::exp(-m * m / (2.0 * sigma * sigma)) +
         m * std::erf(m / (sigma * std::sqrt(2.0)));
}

// int_{-k}^{k} d eta / 2 pi  int |xi| |g^(xi - eta)|^2 d xi / 2 pi in one dimension;
// |g^|^2 / 2 pi is the N(eta, 1 / (2 ell^2)) density.
double band_kinetic(double k, double ell) {
  const double sigma = 1.0 / (std::sqrt(2.0) * ell);
  return integrate([&](double eta) { return abs_mean(eta, sigma); }, -k, k) / (2.0 * pi);
}

}  // namespace

TEST_CASE("coherent profile is normalized") {
  const double ell = 0.7;
  const double m = integrate([&](double x) { return std::pow(coherent_profile(1, ell, x * x), 2.0); }, -20.0, 20.0);
  CHECK(m == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("coherent density matrix, d = 1, s = 1/2") {
  const Params p = validate_params(1, 0.5, true);
  const auto rho = gaussian_rho(4.0, 400, 10.0);
  const double ell = 0.5;
  const auto g = coherent_gamma(rho, ell, p);
  const auto& dg = g.diagnostics;
  CHECK(dg.min_eigenvalue >= -1e-6);
  CHECK(dg.max_eigenvalue <= 1.0 + 1e-6);
  CHECK(dg.trace == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(dg.density_l1_error < 1e-6);

  // kinetic energy of int dy g_y P_k(y) g_y, cell by cell
  const double h = rho.spacing();
  double oracle = 0.0;
  for (double v : rho.values()) oracle += h * band_kinetic(pi * v, ell);
  CHECK(dg.kinetic == doctest::Approx(oracle).epsilon(1e-3));
  CHECK(dg.slack_smeared > 0.0);
  CHECK(dg.slack_unsmeared > 0.0);
  CHECK(dg.smeared_lp < dg.rho_lp);
}

TEST_CASE("coherent state rejects an unresolved Fermi momentum") {
  const Params p = validate_params(1, 0.5, true);
  const auto rho = gaussian_rho(400.0, 40, 10.0);
  CHECK_THROWS_AS(coherent_gamma(rho, 0.5, p), ParamError);
}
