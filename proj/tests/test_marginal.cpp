#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hardylab/marginal.hpp"
#include "hardylab/quadrature.hpp"

using namespace hardylab;
using std::numbers::pi;

TEST_CASE("mixture density is normalized to its mass") {
  const GaussianMixture g(1, {0.3, 1.2}, {-1.0, 2.0}, {0.5, 1.1});
  CHECK(g.mass() == doctest::Approx(1.5));
  const double m = integrate([&](double x) { return g(std::span<const double>(&x, 1)); }, -20.0, 20.0);
  CHECK(m == doctest::Approx(1.5).epsilon(1e-10));
}

TEST_CASE("single Gaussian Coulomb energy") {
  const double sigma = 0.8;
  const GaussianMixture g(3, {1.0}, {0.0, 0.0, 0.0}, {sigma});
  CHECK(g.riesz_energy(1.0) == doctest::Approx(0.5 / (std::sqrt(pi) * sigma)).epsilon(1e-12));
}

TEST_CASE("potential and energy against Monte Carlo") {
  Rng rng(21);
  const auto g = GaussianMixture::random(3, 2.0, 3, 2.0, 0.3, 1.5, rng);
  const std::vector<double> R{0.3, -0.2, 1.0};
  const double lam = 1.0;
  const std::size_t n = 200000;
  std::vector<double> x(3), y(3), pot(n), pair(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.sample(rng, x);
    g.sample(rng, y);
    pot[i] = std::pow(distance(x, R), -lam);
    pair[i] = std::pow(distance(x, y), -lam);
  }
  const double m = g.mass();
  const double pot_mc = m * pairwise_sum(pot) / n;
  const double d_mc = 0.5 * m * m * pairwise_sum(pair) / n;
  CHECK(g.potential(R, lam) == doctest::Approx(pot_mc).epsilon(1e-2));
  CHECK(g.riesz_energy(lam) == doctest::Approx(d_mc).epsilon(1e-2));
}

TEST_CASE("L^p integral by sampling matches quadrature in one dimension") {
  const GaussianMixture g(1, {0.7, 0.3}, {-1.0, 1.5}, {0.6, 0.4});
  const double ref = integrate([&](double x) { return std::pow(g(std::span<const double>(&x, 1)), 5.0 / 3.0); }, -15.0, 15.0);
  Rng rng(4);
  CHECK(g.lp_integral(5.0 / 3.0, 400000, rng) == doctest::Approx(ref).epsilon(5e-3));
}

TEST_CASE("dilation keeps mass and rescales energy") {
  Rng rng(8);
  const auto g = GaussianMixture::random(3, 1.0, 3, 2.0, 0.3, 1.5, rng);
  const auto t = g.dilated(0.25);
  CHECK(t.mass() == doctest::Approx(g.mass()));
  CHECK(t.riesz_energy(1.5) == doctest::Approx(std::pow(0.25, -1.5) * g.riesz_energy(1.5)).epsilon(1e-12));
}

TEST_CASE("product marginal adds the factors") {
  const GaussianMixture a(2, {1.0}, {0.0, 0.0}, {1.0});
  const GaussianMixture b(2, {1.0}, {1.0, 0.0}, {0.5});
  const ProductMeasure mu{{a, b}};
  const auto m = mu.marginal();
  CHECK(m.mass() == doctest::Approx(2.0));
  const std::vector<double> x{0.3, 0.1};
  CHECK(m(x) == doctest::Approx(a(x) + b(x)));
  CHECK_THROWS_AS(GaussianMixture(2, {1.0}, {0.0}, {1.0}), ParamError);
}
