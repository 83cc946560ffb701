#include "hardylab/predictor.hpp"

#include <cmath>

namespace hardylab {

AsymptoticPrediction predicted_kappa(const Params& p, double tau_hat, std::span<const double> N_list,
                                     double band_constant, double omega_hat) {
  if (!(tau_hat > 0.0) || !std::isfinite(tau_hat)) throw ParamError("predicted_kappa: tau_hat must be positive");
  if (!(band_constant >= 0.0)) throw ParamError("predicted_kappa: band constant must be nonnegative");
  if (p.borderline()) throw ParamError("predicted_kappa: needs d > 2s");
  AsymptoticPrediction out;
  out.d = p.d();
  out.s = p.s();
  out.tau_hat = tau_hat;
  out.omega_hat = omega_hat;
  out.c_tf = c_tf(p);
  out.remainder_exponent = p.remainder_exponent();
  out.band_constant = band_constant;
  const double power = -1.0 + 2.0 * p.s() / p.d();
  for (double N : N_list) {
    if (!(N >= 2.0)) throw ParamError("predicted_kappa: need N >= 2");
    const double c = tau_hat * out.c_tf * std::pow(N, power);
    const double rel = band_constant * std::pow(N, -out.remainder_exponent);
    out.rows.push_back({N, c, c * (1.0 - rel), c * (1.0 + rel)});
  }
  return out;
}

double ReferenceLine::value(double N) const { return coefficient * std::pow(N, power); }

std::vector<ReferenceLine> reference_lines(int d, double s) {
  if (d < 1) throw ParamError("reference_lines: need d >= 1");
  (void)s;
  if (d == 1) return {{"kappa_N = 1/2 (d = 1)", "exact", 0.5, 0.0}};
  if (d == 2) return {{"kappa_N >= 4/N (d = 2)", "lower", 4.0, -1.0}};
  return {{"kappa_N >= d^2/N (s = 1)", "lower", double(d) * d, -1.0}};
}

std::vector<CurvePoint> conjecture_2d(std::span<const double> N_list) {
  std::vector<CurvePoint> out;
  for (double N : N_list) {
    if (!(N >= 2.0)) throw ParamError("conjecture_2d: need N >= 2");
    out.push_back({N, 4.0 / std::log(N)});
  }
  return out;
}

}  // namespace hardylab
