#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hardylab/predictor.hpp"

using namespace hardylab;

TEST_CASE("remainder exponents") {
  const std::vector<double> N{10.0};
  CHECK(predicted_kappa(validate_params(3, 1.0), 0.3, N).remainder_exponent == doctest::Approx(1.0 / 9.0));
  CHECK(predicted_kappa(validate_params(4, 1.0), 0.5, N).remainder_exponent == doctest::Approx(1.0 / 8.0));
}

TEST_CASE("central curve is a power law with a symmetric band") {
  const Params p = validate_params(3, 1.0);
  const double tau = 0.2956544;
  // N^{1/3} doubles from N = 1000 to N = 8000
  const std::vector<double> N{1000.0, 8000.0};
  const auto pr = predicted_kappa(p, tau, N, 2.0);
  REQUIRE(pr.rows.size() == 2);
  CHECK(pr.rows[1].central == doctest::Approx(pr.rows[0].central / 2.0));
  CHECK(pr.rows[0].central == doctest::Approx(tau * c_tf(p) / 10.0));
  for (const auto& r : pr.rows) {
    const double w = 2.0 * std::pow(r.N, -1.0 / 9.0);
    CHECK(r.band_lo == doctest::Approx(r.central * (1.0 - w)));
    CHECK(r.band_hi == doctest::Approx(r.central * (1.0 + w)));
  }
  CHECK_FALSE(pr.band_rigorous);
  const auto scaled = predicted_kappa(p, 3.0 * tau, N);
  CHECK(scaled.rows[0].central == doctest::Approx(3.0 * pr.rows[0].central));
  const std::vector<double> bad{1.0};
  CHECK_THROWS_AS(predicted_kappa(p, tau, bad), ParamError);
  CHECK_THROWS_AS(predicted_kappa(p, -1.0, N), ParamError);
}

TEST_CASE("reference lines") {
  const auto one = reference_lines(1, 0.4);
  REQUIRE(one.size() == 1);
  CHECK(one[0].kind == "exact");
  CHECK(one[0].value(50.0) == doctest::Approx(0.5));
  const auto two = reference_lines(2, 0.4);
  CHECK(two[0].kind == "lower");
  CHECK(two[0].value(8.0) == doctest::Approx(0.5));
  CHECK(reference_lines(3, 1.0)[0].value(3.0) == doctest::Approx(3.0));
}

TEST_CASE("two-dimensional conjecture curve") {
  const std::vector<double> N{std::exp(4.0), 1000.0, 1e6};
  const auto c = conjecture_2d(N);
  CHECK(c[0].value == doctest::Approx(1.0));
  CHECK(c[1].value == doctest::Approx(0.579).epsilon(1e-3));
  CHECK(c[2].value < c[1].value);
  const std::vector<double> bad{1.0};
  CHECK_THROWS(conjecture_2d(bad));
}
