#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "hardylab/core.hpp"

namespace hardylab {

struct KappaRow {
  double N;
  /// tau_hat c_tf N^{-1+2s/d}
  double central;
  /// central (1 -/+ band_constant N^{-s(d-2s)/d^2})
  double band_lo;
  double band_hi;
};

struct AsymptoticPrediction {
  int d;
  double s;
  double tau_hat;
  double omega_hat;  // NaN when not supplied
  double c_tf;
  double remainder_exponent;
  double band_constant;
  /// the band constant is a user knob, never a proved value
  bool band_rigorous = false;
  std::vector<KappaRow> rows;
};

AsymptoticPrediction predicted_kappa(const Params& p, double tau_hat, std::span<const double> N_list,
                                     double band_constant = 1.0, double omega_hat = std::numeric_limits<double>::quiet_NaN());

struct ReferenceLine {
  std::string label;
  /// "exact" or "lower"
  std::string kind;
  /// value(N) = coefficient * N^power
  double coefficient;
  double power;

  double value(double N) const;
};

/// Known values of the sharp constant for the Coulomb-type case s = 1.
std::vector<ReferenceLine> reference_lines(int d, double s);

struct CurvePoint {
  double N;
  double value;
};

/// 4 / ln N: the proved asymptotic upper bound in d = 2, conjectured limit.
std::vector<CurvePoint> conjecture_2d(std::span<const double> N_list);

inline constexpr const char* kConjecture2dLabel = "4/ln N (proved upper-bound asymptotics; conjectured limit)";

}  // namespace hardylab
