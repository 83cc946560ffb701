#include "hardylab/special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "hardylab/core.hpp"

namespace hardylab {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// log Gamma(x) for x >= 0.5
double lanczos_log(double x) {
  x -= 1.0;
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
  const double t = x + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

double gamma(double x) {
  if (!(x > 0.0)) throw ParamError("gamma: argument must be positive");
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
  }
  // Small integers and half-integers are common here; the recurrence keeps
  // them at full precision.
  if (x < 1.5) return std::exp(lanczos_log(x));
  if (x <= 20.0) {
    double f = 1.0;
    while (x >= 1.5) {
      x -= 1.0;
      f *= x;
    }
    return f * std::exp(lanczos_log(x));
  }
  return std::exp(lanczos_log(x));
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw ParamError("log_gamma: argument must be positive");
  if (x < 0.5) {
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  }
  if (x <= 20.0) return std::log(gamma(x));
  return lanczos_log(x);
}

double bessel_j(double nu, double x) {
  if (nu < 0.0 || x < 0.0) throw ParamError("bessel_j: need nu >= 0 and x >= 0");
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  if (x < 20.0) {
    const long double h = 0.5L * x;
    const long double h2 = h * h;
    long double term = std::pow(h, static_cast<long double>(nu)) / gamma(nu + 1.0);
    long double sum = term;
    for (int k = 1; k < 200; ++k) {
      term *= -h2 / (static_cast<long double>(k) * (k + nu));
      sum += term;
      if (std::fabs(term) < 1e-22L * std::fabs(sum) && k > h) break;
    }
    return static_cast<double>(sum);
  }
  const double mu = 4.0 * nu * nu;
  double P = 0.0;
  double Q = 0.0;
  double a = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 200; ++k) {
    if (k > 0) a *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k * x);
    const double mag = std::fabs(a);
    if (mag > prev) break;
    prev = mag;
    switch (k % 4) {
      case 0: P += a; break;
      case 1: Q += a; break;
      case 2: P -= a; break;
      default: Q -= a; break;
    }
    if (mag < 1e-17) break;
  }
  const double chi = x - (0.5 * nu + 0.25) * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (P * std::cos(chi) - Q * std::sin(chi));
}

double bessel_j1(double x) {
  if (x < 0.0) return -bessel_j(1.0, -x);
  return bessel_j(1.0, x);
}

namespace {

double beta_cf(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m < 10000; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) return h;
  }
  throw NumericalError("incomplete_beta: continued fraction did not converge");
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw ParamError("incomplete_beta: need a, b > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double lbt = log_gamma(a + b) - log_gamma(a) - log_gamma(b) + a * std::log(x) +
                     b * std::log1p(-x);
  const double bt = std::exp(lbt);
  if (x < (a + 1.0) / (a + b + 2.0)) return bt * beta_cf(a, b, x) / a;
  return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

double hyp1f1_negative(double a, double b, double z) {
  if (z > 0.0) throw ParamError("hyp1f1_negative: need z <= 0");
  if (!(a > 0.0) || !(b > a)) throw ParamError("hyp1f1_negative: need 0 < a < b");
  const double y = -z;
  if (y <= 50.0) {
    // Kummer transformation turns the alternating series into a positive one.
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < 2000; ++k) {
      term *= (b - a + k) * y / ((b + k) * (k + 1.0));
      sum += term;
      if (term < 1e-17 * sum && k > y) break;
    }
    return std::exp(-y) * sum;
  }
  // Large |z|: algebraic branch of the asymptotic expansion; the other
  // branch is O(e^z) and below double resolution here.
  double term = 1.0;
  double sum = 1.0;
  double prev = 1.0;
  for (int k = 0; k < 200; ++k) {
    term *= (a + k) * (a - b + 1.0 + k) / ((k + 1.0) * y);
    if (std::fabs(term) > prev) break;
    prev = std::fabs(term);
    sum += term;
    if (prev < 1e-17) break;
  }
  return std::exp(log_gamma(b) - log_gamma(b - a) - a * std::log(y)) * sum;
}

double ball_intersection_volume(int d, double r, double D) {
  if (d < 1 || r < 0.0 || D < 0.0) throw ParamError("ball_intersection_volume: bad arguments");
  if (D >= 2.0 * r) return 0.0;
  const double x = 1.0 - D * D / (4.0 * r * r);
  return unit_ball_volume(d) * std::pow(r, d) * incomplete_beta(0.5 * (d + 1), 0.5, x);
}

double gaussian_inverse_moment(int d, double lambda, double a_norm, double sigma) {
  if (!(lambda >= 0.0) || !(lambda < d)) throw ParamError("gaussian_inverse_moment: need 0 <= lambda < d");
  if (lambda == 0.0) return 1.0;
  const double z = -a_norm * a_norm / (2.0 * sigma * sigma);
  const double pref = std::pow(2.0 * sigma * sigma, -0.5 * lambda) *
                      std::exp(log_gamma(0.5 * (d - lambda)) - log_gamma(0.5 * d));
  return pref * hyp1f1_negative(0.5 * lambda, 0.5 * d, z);
}

}  // namespace hardylab
