#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "hardylab/core.hpp"
#include "hardylab/quadrature.hpp"
#include "hardylab/radial_pairs.hpp"

namespace hardylab {

namespace {

constexpr double kTableStep = 0.02;
constexpr double kTableEnd = 40.0;

}  // namespace

double AngularFactor::evaluate(int d, double lambda, double u) {
  const double e = -std::expm1(-u);  // t
  const double gap = std::exp(-u);   // 1 - t
  if (d == 1) return std::pow(gap, -lambda) + std::pow(2.0 - gap, -lambda);
  const double gap2 = gap * gap;
  auto f = [&](double theta) {
    const double s = std::sin(0.5 * theta);
    const double base = gap2 + 4.0 * e * s * s;
    double v = std::pow(base, -0.5 * lambda);
    if (d > 2) v *= std::pow(std::sin(theta), d - 2);
    return v;
  };
  // the peak at theta = 0 has width ~ (1 - t)
  std::vector<double> bp;
  for (double th = gap; th < std::numbers::pi; th *= 2.0) bp.push_back(th);
  QuadOptions opts;
  opts.abs_tol = 0.0;
  opts.rel_tol = 1e-13;
  opts.max_intervals = 20000;
  QuadResult res = integrate_adaptive(f, 0.0, std::numbers::pi, opts, bp);
  if (!(res.error <= 1e-10 * std::fabs(res.value))) {
    throw NumericalError("angular factor quadrature failed at u = " + std::to_string(u));
  }
  return sphere_area(d - 1) * res.value;
}

AngularFactor::AngularFactor(int d, double lambda) : d_(d), lambda_(lambda), du_(kTableStep) {
  if (d < 1 || !(lambda > 0.0)) throw ParamError("AngularFactor: need d >= 1, lambda > 0");
  if (d == 1) return;
  const int n = static_cast<int>(std::lround(kTableEnd / du_)) + 1;
  log_table_.resize(n);
  for (int k = 0; k < n; ++k) log_table_[k] = std::log(evaluate(d, lambda, k * du_));
}

double AngularFactor::at_u(double u) const {
  if (d_ == 1) {
    const double gap = std::exp(-u);
    return std::pow(gap, -lambda_) + std::pow(2.0 - gap, -lambda_);
  }
  const int n = static_cast<int>(log_table_.size());
  const double x = u / du_;
  if (x >= n - 1) {
    // power-law regime in 1 - t: ln A is linear in u
    const double slope = (log_table_[n - 1] - log_table_[n - 2]) / du_;
    return std::exp(log_table_[n - 1] + slope * (u - (n - 1) * du_));
  }
  int k = static_cast<int>(x);
  int k0 = std::clamp(k - 1, 0, n - 4);
  const double s = x - k0;
  // cubic Lagrange through k0 .. k0 + 3
  const double l0 = -(s - 1) * (s - 2) * (s - 3) / 6.0;
  const double l1 = s * (s - 2) * (s - 3) / 2.0;
  const double l2 = -s * (s - 1) * (s - 3) / 2.0;
  const double l3 = s * (s - 1) * (s - 2) / 6.0;
  return std::exp(l0 * log_table_[k0] + l1 * log_table_[k0 + 1] + l2 * log_table_[k0 + 2] +
                  l3 * log_table_[k0 + 3]);
}

const AngularFactor& angular_factor(int d, double lambda) {
  static std::mutex mu;
  static std::map<std::pair<int, double>, std::unique_ptr<AngularFactor>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{d, lambda}];
  if (!slot) slot = std::make_unique<AngularFactor>(d, lambda);
  return *slot;
}

}  // namespace hardylab
