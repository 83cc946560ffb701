#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hardylab/manybody.hpp"
#include "hardylab/quadrature.hpp"

using namespace hardylab;
using std::numbers::pi;

TEST_CASE("Fermi sea construction and orthonormality") {
  const auto st = SlaterState::build(2, 2.0 * pi, 1.5);
  // momenta (0,0), (+-1,0), (0,+-1)
  CHECK(st.N() == 5);
  CHECK(gram_deviation(st) < 1e-8);
  CHECK(slater_mass(st) == doctest::Approx(5.0).epsilon(1e-8));
  CHECK(SlaterState::with_particle_count(2, 2.0 * pi, 7).N() == 7);
  const std::vector<double> x{0.1, -0.4};
  CHECK(st.density(x) == doctest::Approx(5.0 / (4.0 * pi * pi) * st.box_profile(x)));
}

TEST_CASE("mollifier profile") {
  const Mollifier z{0.5};
  CHECK(integrate([&](double t) { return z.zeta(t); }, -0.25, 0.25) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(z.profile(0.0, 2.0) == doctest::Approx(1.0));
  CHECK(z.profile(2.0, 2.0) == doctest::Approx(0.0));
  CHECK(z.profile(1.0, 2.0) == doctest::Approx(0.5));
}

TEST_CASE("s = 1 kinetic: exact split agrees with the frequency lattice") {
  const auto st = SlaterState::build(2, 2.0 * pi, 4.5, std::nullopt, 1.0 / 16.0);
  const Params p = validate_params(2, 1.0, true);
  const double split = slater_kinetic(st, p);
  const double spectral = slater_kinetic_spectral(st, 1.0);
  // sqrt F has a t^{3/2} edge, so the truncated frequency sum converges slowly at s = 1
  CHECK(spectral == doctest::Approx(split).epsilon(2e-3));
  double plane = 0.0;
  for (std::size_t k = 0; k < st.N(); ++k) {
    const auto m = st.momentum(k);
    plane += m[0] * m[0] + m[1] * m[1];
  }
  CHECK(split > plane);
}

namespace {

// Polar form of the autocorrelation integral: the difference y - y' has
// density (1 - |z1|)(1 - |z2|) on [-1, 1]^2.
double i_epsilon_oracle(double eps) {
  auto inner = [eps](double th) {
    const double c = std::cos(th), s = std::sin(th);
    const double rm = 1.0 / std::max(c, s);
    return std::log(rm / eps) - (c + s) * (rm - eps) + c * s * (rm * rm - eps * eps) / 2.0;
  };
  const int n = 4000;
  const double h = 0.5 * pi / n;
  double acc = inner(0.0) + inner(0.5 * pi);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * inner(i * h);
  return 4.0 * acc * h / 3.0;
}

}  // namespace

TEST_CASE("I(eps) against the polar oracle") {
  for (double eps : {0.5, 0.1, 1e-2, 1e-3}) {
    CHECK(i_epsilon(eps).value == doctest::Approx(i_epsilon_oracle(eps)).epsilon(1e-6));
  }
  CHECK(i_epsilon(1.5).out_of_range);
  CHECK_THROWS_AS(i_epsilon(0.0), ParamError);
}

TEST_CASE("interaction estimate against determinantal sampling") {
  const auto st = SlaterState::build(2, 2.0 * pi, 1.5);
  const Params p = validate_params(2, 0.5);
  const auto in = slater_interaction(st, p);
  Rng rng(99);
  const std::size_t n = 20000;
  std::vector<double> vals(n);
  for (std::size_t t = 0; t < n; ++t) {
    const auto X = sample_slater_points(st, rng);
    double acc = 0.0;
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = a + 1; b < 5; ++b)
        acc += 1.0 / std::hypot(X[2 * a] - X[2 * b], X[2 * a + 1] - X[2 * b + 1]);
    vals[t] = acc;
  }
  const double mc = pairwise_sum(vals) / n;
  CHECK(in.estimate == doctest::Approx(mc).epsilon(2e-2));
  CHECK(in.lower_bound <= in.estimate);
  CHECK(in.min_pair_density >= -1e-12);
}

TEST_CASE("sampled points stay in the support") {
  const auto st = SlaterState::build(2, 2.0 * pi, 2.5);
  Rng rng(3);
  const double half = 0.5 * (st.L() + st.ell());
  for (int t = 0; t < 200; ++t) {
    for (double v : sample_slater_points(st, rng)) CHECK(std::abs(v) <= half);
  }
}

TEST_CASE("exchange bound sweep reports its own maximum") {
  const auto st = SlaterState::build(2, 2.0 * pi, 20.0);
  const auto rep = exchange_lattice_bound(st, 4.0, 60, 32);
  const auto S = st.momentum_sum(rep.argmax);
  const double L2 = st.L() * st.L();
  const double r = std::hypot(rep.argmax[0], rep.argmax[1]);
  CHECK(rep.sup == doctest::Approx(std::abs(S) / L2 * r / std::sqrt(st.fermi_mu())).epsilon(1e-12));
  CHECK(rep.evaluations == 60u * 32u);
  CHECK(std::isfinite(rep.sup));
}

TEST_CASE("Hardy quotient is finite and positive at the borderline") {
  const auto st = SlaterState::with_particle_count(2, 2.0 * pi, 40);
  const Params p = validate_params(2, 1.0, true);
  const auto h = hardy_quotient(st, p);
  CHECK(h.quotient > 0.0);
  CHECK(h.quotient == doctest::Approx(h.kinetic / h.interaction.lower_bound));
}

TEST_CASE("I(eps) approaches 2 pi ln(1/eps) up to a constant") {
  const double c1 = i_epsilon(1e-3).value - 2.0 * pi * std::log(1e3);
  const double c2 = i_epsilon(1e-5).value - 2.0 * pi * std::log(1e5);
  CHECK(c1 == doctest::Approx(c2).epsilon(1e-2));
  CHECK(i_epsilon(1e-5).value / (2.0 * pi * std::log(1e5)) > i_epsilon(1e-3).value / (2.0 * pi * std::log(1e3)));
}

TEST_CASE("exchange sweep over Fermi seas of growing size") {
  std::vector<double> sups;
  for (std::size_t N : {100, 1000}) {
    const auto st = SlaterState::with_particle_count(2, 2.0 * pi, N);
    const auto rep = exchange_lattice_bound(st);
    CHECK(rep.sup <= 10.0);
    sups.push_back(rep.sup);
  }
  // mu -> 4 mu at fixed L
  const auto a = SlaterState::build(2, 2.0 * pi, 30.0);
  const auto b = SlaterState::build(2, 2.0 * pi, 120.0);
  const double ra = exchange_lattice_bound(a).sup, rb = exchange_lattice_bound(b).sup;
  CHECK(rb / ra > 0.5);
  CHECK(rb / ra < 2.0);
  const std::vector<double> tiny{1e-9, 0.0};
  CHECK(std::abs(a.momentum_sum(tiny)) == doctest::Approx(double(a.N())).epsilon(1e-9));
}
