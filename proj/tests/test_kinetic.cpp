#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hardylab/density.hpp"
#include "hardylab/kinetic.hpp"

using namespace hardylab;
using std::numbers::pi;

namespace {

// ||(-Delta)^{s/2} e^{-|x|^2/2}||^2 = int |xi|^{2s} e^{-|xi|^2} dxi
double gaussian_kinetic(int d, double s) {
  const double area = 2.0 * std::pow(pi, 0.5 * d) / std::tgamma(0.5 * d);
  return 0.5 * area * std::tgamma(0.5 * d + s);
}

}  // namespace

TEST_CASE("radial kinetic energy of a Gaussian") {
  const auto radii = RadialDensity::log_grid(400, 1e-3, 12.0);
  std::vector<double> f(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) f[i] = std::exp(-0.5 * radii[i] * radii[i]);
  for (auto [d, s] : {std::pair{3, 1.0}, {3, 0.5}, {4, 1.0}, {2, 0.5}}) {
    CHECK(fractional_kinetic(d, radii, f, s) == doctest::Approx(gaussian_kinetic(d, s)).epsilon(2e-3));
  }
}

TEST_CASE("Cartesian spectral kinetic energy of a Gaussian") {
  for (int d : {1, 2}) {
    const std::size_t n = d == 1 ? 256 : 64;
    const double half = 8.0, h = 2.0 * half / n;
    std::vector<double> f(std::size_t(std::pow(n, d)));
    for (std::size_t i = 0; i < f.size(); ++i) {
      double r2 = 0.0;
      std::size_t rem = i;
      for (int a = 0; a < d; ++a) {
        const double x = -half + h * (double(rem % n) + 0.5);
        rem /= n;
        r2 += x * x;
      }
      f[i] = std::exp(-0.5 * r2);
    }
    CHECK(fractional_kinetic_cartesian(d, n, h, f, 1.0) == doctest::Approx(gaussian_kinetic(d, 1.0)).epsilon(1e-4));
    CHECK(fractional_kinetic_cartesian(d, n, h, f, 0.5) == doctest::Approx(gaussian_kinetic(d, 0.5)).epsilon(1e-3));
    // small s: the missed cusp at xi = 0 shrinks with the padding
    const double exact = gaussian_kinetic(d, 0.25);
    const double e8 = std::abs(fractional_kinetic_cartesian(d, n, h, f, 0.25) / exact - 1.0);
    const double e32 = std::abs(fractional_kinetic_cartesian(d, n, h, f, 0.25, 32) / exact - 1.0);
    CHECK(e8 < 5e-3);
    CHECK(e32 < e8);
  }
}

TEST_CASE("Gagliardo constant normalizes the double-integral form") {
  // d = 1, s = 1/2: C = 2 Gamma(1) / (sqrt(pi) |Gamma(-1/2)|) = 1 / pi
  CHECK(gagliardo_constant(1, 0.5) == doctest::Approx(1.0 / pi).epsilon(1e-13));
}

TEST_CASE("kinetic form is positive semidefinite and scales") {
  const auto radii = RadialDensity::log_grid(120, 1e-3, 10.0);
  std::vector<double> f(radii.size()), g(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    f[i] = std::exp(-radii[i]) * (1.0 + std::sin(3.0 * radii[i]));
    g[i] = 3.0 * f[i];
  }
  const RadialKineticOperator K(3, radii, 0.7);
  const double e = K.energy(f);
  CHECK(e > 0.0);
  CHECK(K.energy(g) == doctest::Approx(9.0 * e).epsilon(1e-12));
}
