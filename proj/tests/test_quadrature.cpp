#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hardylab/core.hpp"
#include "hardylab/quadrature.hpp"

using namespace hardylab;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  for (int n : {2, 4, 8, 16, 48}) {
    const Rule& r = gauss_legendre(n);
    for (int k = 0; k < 2 * n; ++k) {
      double acc = 0.0;
      for (std::size_t i = 0; i < r.x.size(); ++i) acc += r.w[i] * std::pow(r.x[i], k);
      const double ref = k % 2 ? 0.0 : 2.0 / (k + 1.0);
      CHECK(acc == doctest::Approx(ref).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("adaptive quadrature with endpoint singularities") {
  CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(integrate([](double x) { return std::log(x); }, 0.0, 1.0) == doctest::Approx(-1.0).epsilon(1e-10));
  const double bp[] = {0.5};
  CHECK(integrate([](double x) { return std::abs(x - 0.5); }, 0.0, 1.0, {}, bp) == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(integrate([](double x) { return std::exp(-x * x); }, -10.0, 10.0) ==
        doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("quadrature failure is reported") {
  QuadOptions o;
  o.max_intervals = 20;
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, o), NumericalError);
  const auto res = integrate_adaptive([](double x) { return 1.0 / x; }, 0.0, 1.0, o);
  CHECK_FALSE(res.converged);
}

TEST_CASE("pairwise summation is order-stable and accurate") {
  std::vector<double> v(100001, 0.1);
  CHECK(pairwise_sum(v) == doctest::Approx(10000.1).epsilon(1e-14));
  Rng rng(3);
  std::normal_distribution<double> g;
  std::vector<double> w(5000);
  for (auto& x : w) x = g(rng);
  CHECK(pairwise_sum(w) == pairwise_sum(w));
}
