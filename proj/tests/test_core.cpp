#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hardylab/core.hpp"

using namespace hardylab;
using std::numbers::pi;

namespace {

// Semiclassical ratio from the Fermi ball: kinetic over int rho^{1+2s/d}
// for rho = omega_d k^d / (2 pi)^d.
double fermi_ball_ratio(int d, double s) {
  const double omega = std::pow(pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
  const double k = 1.7;
  const double rho = omega * std::pow(k, d) / std::pow(2.0 * pi, d);
  const double kin = d * omega * std::pow(k, d + 2.0 * s) / ((d + 2.0 * s) * std::pow(2.0 * pi, d));
  return kin / std::pow(rho, 1.0 + 2.0 * s / d);
}

}  // namespace

TEST_CASE("c_tf closed forms") {
  CHECK(c_tf(validate_params(3, 1.0)) == doctest::Approx(0.6 * std::pow(6.0 * pi * pi, 2.0 / 3.0)).epsilon(1e-13));
  CHECK(c_tf(validate_params(4, 1.0)) == doctest::Approx(8.0 * pi / 3.0 * std::sqrt(2.0)).epsilon(1e-13));
  for (int d = 1; d <= 5; ++d) {
    for (double s : {0.1, 0.25, 0.45, 0.75, 1.0}) {
      if (!(2.0 * s < d)) continue;
      CHECK(c_tf(validate_params(d, s)) == doctest::Approx(fermi_ball_ratio(d, s)).epsilon(1e-12));
    }
  }
}

TEST_CASE("semiclassical constant covers the borderline case") {
  CHECK(semiclassical_constant(2, 1.0) == doctest::Approx(fermi_ball_ratio(2, 1.0)).epsilon(1e-12));
  CHECK(semiclassical_constant(1, 0.5) == doctest::Approx(fermi_ball_ratio(1, 0.5)).epsilon(1e-12));
  CHECK_THROWS_AS(c_tf(validate_params(2, 1.0, true)), ParamError);
}

TEST_CASE("parameter gate") {
  CHECK_NOTHROW(validate_params(1, 0.4));
  CHECK_THROWS_AS(validate_params(1, 0.6), ParamError);
  CHECK_THROWS_AS(validate_params(2, 1.0), ParamError);
  CHECK_NOTHROW(validate_params(2, 1.0, true));
  CHECK_THROWS_AS(validate_params(3, 1.2), ParamError);
  CHECK_THROWS_AS(validate_params(3, 0.0), ParamError);
  CHECK_THROWS_AS(validate_params(0, 0.1), ParamError);
  const Params p = validate_params(3, 1.0);
  CHECK(p.q() == doctest::Approx(5.0 / 3.0));
  CHECK(p.remainder_exponent() == doctest::Approx(1.0 / 9.0));
  CHECK(p.lambda() == 2.0);
  for (int d = 1; d <= 6; ++d)
    for (double s : {0.2, 0.4, 0.8, 1.0}) {
      if (!(2.0 * s < d)) continue;
      CHECK(validate_params(d, s).decay_condition() == (2.0 * s * s - s * (d - 2.0) + d > 0.0));
    }
}

TEST_CASE("ball and sphere measures") {
  CHECK(unit_ball_volume(1) == doctest::Approx(2.0));
  CHECK(unit_ball_volume(2) == doctest::Approx(pi));
  CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * pi / 3.0));
  CHECK(sphere_area(1) == doctest::Approx(2.0));
  CHECK(sphere_area(3) == doctest::Approx(4.0 * pi));
  for (int d = 1; d <= 6; ++d) CHECK(sphere_area(d) == doctest::Approx(d * unit_ball_volume(d)));
}

TEST_CASE("derived seeds are reproducible and spread") {
  CHECK(derive_seed(7, 3) == derive_seed(7, 3));
  CHECK(derive_seed(7, 3) != derive_seed(7, 4));
  CHECK(derive_seed(7, 3) != derive_seed(8, 3));
}

TEST_CASE("point configurations") {
  const PointConfig R(2, {{0.0, 0.0}, {3.0, 4.0}, {0.0, 1.0}});
  CHECK(R.size() == 3);
  CHECK(distance(R[0], R[1]) == doctest::Approx(5.0));
  CHECK(nearest_neighbor_distance(R, 0) == doctest::Approx(1.0));
  const std::vector<double> y{0.0, 0.4};
  CHECK(nearest_distance(R, y) == doctest::Approx(0.4));
  CHECK(pair_sum(R, 1.0) == doctest::Approx(1.0 / 5.0 + 1.0 + 1.0 / std::sqrt(9.0 + 9.0)));
  const PointConfig dup(2, {{1.0, 1.0}, {1.0, 1.0}});
  CHECK_THROWS_AS(dup.require_distinct(), ParamError);
}

TEST_CASE("Voronoi potential: nonnegative and homogeneous") {
  Rng rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 1 + trial % 3;
    const std::size_t K = 2 + trial % 4;
    std::vector<double> c(K * d);
    for (auto& x : c) x = u(rng);
    const PointConfig R(d, c);
    const double s = d == 1 ? 0.3 : 0.7;
    const VoronoiPotentials vp(R, s);
    const double t = 0.5 + 2.0 * (u(rng) + 1.0);
    const VoronoiPotentials vt(R.scaled(t), s);
    CHECK(vt.U() == doctest::Approx(std::pow(t, -2.0 * s) * vp.U()).epsilon(1e-12));
    std::vector<double> y(d), ty(d);
    for (int a = 0; a < d; ++a) {
      y[a] = 2.0 * u(rng);
      ty[a] = t * y[a];
    }
    const double v = vp.V(y);
    CHECK(v >= 0.0);
    CHECK(vt.V(ty) == doctest::Approx(std::pow(t, -2.0 * s) * v).epsilon(1e-12));
  }
}
