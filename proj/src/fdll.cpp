#include <cmath>

#include "hardylab/quadrature.hpp"
#include "hardylab/riesz.hpp"
#include "hardylab/special.hpp"

namespace hardylab {

namespace {

// Integrand of the ball integral after r = (D/2) v^{-1/lambda}, v in (0, 1],
// without the prefactor (D/2)^{-lambda} / lambda. Bounded on [0, 1], with
// limit omega_d at v = 0.
double fdll_integrand(int d, double lambda, double v) {
  if (v <= 0.0) return unit_ball_volume(d);
  const double r = std::pow(v, -1.0 / lambda);  // radius in units of D/2
  // |B_r cap B_r| at center distance 2, rescaled by r^-d
  return ball_intersection_volume(d, 1.0, 2.0 / r);
}

}  // namespace

double fdll_ball_integral(const RieszKernel& k, double D) {
  if (!(D > 0.0)) throw ParamError("fdll_ball_integral: distance must be positive");
  const int d = k.dim();
  const double lambda = k.lambda();
  // integrate directly in r over [D/2, inf): split at 2D, map the tail to (0, 1]
  QuadOptions opts;
  opts.abs_tol = 0.0;
  opts.rel_tol = 1e-13;
  opts.max_intervals = 20000;
  auto near = [&](double r) { return std::pow(r, -d - lambda - 1.0) * ball_intersection_volume(d, r, D); };
  const double a = integrate(near, 0.5 * D, 2.0 * D, opts);
  // r = 2D / z^{1/lambda}: dr = (2D / lambda) z^{-1/lambda - 1} dz
  auto tail = [&](double z) {
    if (z <= 0.0) return unit_ball_volume(d) * std::pow(2.0 * D, -lambda) / lambda;
    const double r = 2.0 * D * std::pow(z, -1.0 / lambda);
    return near(r) * (2.0 * D / lambda) * std::pow(z, -1.0 / lambda - 1.0);
  };
  const double b = integrate(tail, 0.0, 1.0, opts);
  return a + b;
}

double fdll_constant(const RieszKernel& k, double calibration_distance) {
  return std::pow(calibration_distance, -k.lambda()) / fdll_ball_integral(k, calibration_distance);
}

double fdll_reconstruct(std::span<const double> y, std::span<const double> yp, const RieszKernel& k,
                        int resolution) {
  if (resolution < 1) throw ParamError("fdll_reconstruct: resolution must be >= 1");
  const double D = distance(y, yp);
  if (!(D > 0.0)) throw ParamError("fdll_reconstruct: points must differ");
  static thread_local int cached_d = 0;
  static thread_local double cached_lambda = 0.0;
  static thread_local double cached_c = 0.0;
  if (cached_d != k.dim() || cached_lambda != k.lambda()) {
    cached_c = fdll_constant(k);
    cached_d = k.dim();
    cached_lambda = k.lambda();
  }
  const int d = k.dim();
  const double lambda = k.lambda();
  std::vector<double> terms(resolution);
  for (int j = 0; j < resolution; ++j) {
    terms[j] = fdll_integrand(d, lambda, (j + 0.5) / resolution);
  }
  const double integral = std::pow(0.5 * D, -lambda) / lambda * pairwise_sum(terms) / resolution;
  return cached_c * integral;
}

}  // namespace hardylab
