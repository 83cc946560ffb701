#include "hardylab/density.hpp"

#include <algorithm>
#include <cmath>

#include "hardylab/core.hpp"
#include "hardylab/quadrature.hpp"

namespace hardylab {

namespace {

constexpr int kSegmentPoints = 6;

void check_values(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x) || x < 0.0) throw ParamError("density values must be finite and >= 0");
  }
}

}  // namespace

RadialDensity::RadialDensity(int d, std::vector<double> radii, std::vector<double> values)
    : d_(d), r_(std::move(radii)), v_(std::move(values)) {
  if (d_ < 1) throw ParamError("RadialDensity: dimension must be >= 1");
  if (r_.empty() || r_.size() != v_.size()) throw ParamError("RadialDensity: size mismatch");
  if (!(r_[0] > 0.0)) throw ParamError("RadialDensity: radii must be positive");
  for (std::size_t i = 1; i < r_.size(); ++i) {
    if (!(r_[i] > r_[i - 1])) throw ParamError("RadialDensity: radii must increase");
  }
  check_values(v_);
  const double area = sphere_area(d_);
  const Rule& g = gauss_legendre(kSegmentPoints);
  w_.assign(r_.size(), 0.0);
  for (const auto& seg : segments()) {
    const double c = 0.5 * (seg.lo + seg.hi);
    const double h = 0.5 * (seg.hi - seg.lo);
    for (int q = 0; q < kSegmentPoints; ++q) {
      const double r = c + h * g.x[q];
      const double wq = h * g.w[q] * area * std::pow(r, d_ - 1);
      w_[seg.left] += wq * seg.shape_left(r);
      w_[seg.right] += wq * seg.shape_right(r);
    }
  }
}

std::vector<double> RadialDensity::log_grid(std::size_t n, double r_min, double r_max) {
  if (n < 2 || !(r_min > 0.0) || !(r_max > r_min)) throw ParamError("log_grid: bad arguments");
  std::vector<double> r(n);
  const double a = std::log(r_min);
  const double b = std::log(r_max);
  for (std::size_t i = 0; i < n; ++i) r[i] = std::exp(a + (b - a) * double(i) / double(n - 1));
  r.front() = r_min;
  r.back() = r_max;
  return r;
}

RadialDensity RadialDensity::from_function(int d, std::vector<double> radii,
                                           const std::function<double(double)>& f) {
  std::vector<double> v(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) v[i] = f(radii[i]);
  return {d, std::move(radii), std::move(v)};
}

std::vector<RadialSegment> RadialDensity::segments() const {
  std::vector<RadialSegment> out;
  out.reserve(r_.size());
  out.push_back({0.0, r_[0], 0, 0});
  for (std::size_t i = 1; i < r_.size(); ++i) out.push_back({r_[i - 1], r_[i], i - 1, i});
  return out;
}

double RadialDensity::operator()(double r) const {
  r = std::fabs(r);
  if (r <= r_[0]) return v_[0];
  if (r > r_.back()) return 0.0;
  auto it = std::upper_bound(r_.begin(), r_.end(), r);
  if (it == r_.end()) return v_.back();
  const std::size_t i = static_cast<std::size_t>(it - r_.begin());
  const double t = (r - r_[i - 1]) / (r_[i] - r_[i - 1]);
  return (1.0 - t) * v_[i - 1] + t * v_[i];
}

double RadialDensity::mass() const {
  std::vector<double> terms(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) terms[i] = w_[i] * v_[i];
  return pairwise_sum(terms);
}

double RadialDensity::lp_integral(double p) const {
  const double area = sphere_area(d_);
  const Rule& g = gauss_legendre(kSegmentPoints);
  std::vector<double> terms;
  terms.reserve(r_.size());
  for (const auto& seg : segments()) {
    const double c = 0.5 * (seg.lo + seg.hi);
    const double h = 0.5 * (seg.hi - seg.lo);
    double acc = 0.0;
    for (int q = 0; q < kSegmentPoints; ++q) {
      const double r = c + h * g.x[q];
      const double val = v_[seg.left] * seg.shape_left(r) + v_[seg.right] * seg.shape_right(r);
      if (val > 0.0) acc += g.w[q] * std::pow(val, p) * std::pow(r, d_ - 1);
    }
    terms.push_back(h * area * acc);
  }
  return pairwise_sum(terms);
}

std::vector<double> RadialDensity::lp_gradient(double p) const {
  const double area = sphere_area(d_);
  const Rule& g = gauss_legendre(kSegmentPoints);
  std::vector<double> grad(v_.size(), 0.0);
  for (const auto& seg : segments()) {
    const double c = 0.5 * (seg.lo + seg.hi);
    const double h = 0.5 * (seg.hi - seg.lo);
    for (int q = 0; q < kSegmentPoints; ++q) {
      const double r = c + h * g.x[q];
      const double sl = seg.shape_left(r);
      const double sr = seg.shape_right(r);
      const double val = v_[seg.left] * sl + v_[seg.right] * sr;
      if (val <= 0.0) continue;
      const double f = h * area * g.w[q] * p * std::pow(val, p - 1.0) * std::pow(r, d_ - 1);
      grad[seg.left] += f * sl;
      grad[seg.right] += f * sr;
    }
  }
  return grad;
}

RadialDensity RadialDensity::with_values(std::vector<double> values) const {
  return {d_, r_, std::move(values)};
}

RadialDensity RadialDensity::dilated(double t) const {
  if (!(t > 0.0)) throw ParamError("dilation factor must be positive");
  std::vector<double> r = r_;
  std::vector<double> v = v_;
  const double f = std::pow(t, d_);
  for (auto& x : r) x /= t;
  for (auto& x : v) x *= f;
  return {d_, std::move(r), std::move(v)};
}

RadialDensity RadialDensity::scaled(double c) const {
  std::vector<double> v = v_;
  for (auto& x : v) x *= c;
  return {d_, r_, std::move(v)};
}

CartesianDensity::CartesianDensity(int d, std::size_t n, double h, double origin,
                                   std::vector<double> values)
    : d_(d), n_(n), h_(h), origin_(origin), v_(std::move(values)) {
  if (d_ < 1 || d_ > 3) throw ParamError("CartesianDensity: dimension must be 1, 2 or 3");
  if (n_ == 0 || !(h_ > 0.0)) throw ParamError("CartesianDensity: bad grid");
  std::size_t total = 1;
  for (int i = 0; i < d_; ++i) total *= n_;
  if (v_.size() != total) throw ParamError("CartesianDensity: value count mismatch");
  check_values(v_);
}

CartesianDensity CartesianDensity::sample(int d, std::size_t n, double h, double origin,
                                          const std::function<double(std::span<const double>)>& f) {
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) total *= n;
  std::vector<double> v(total);
  std::vector<double> x(d);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (int a = d - 1; a >= 0; --a) {
      x[a] = origin + h * (double(rem % n) + 0.5);
      rem /= n;
    }
    v[idx] = f(x);
  }
  return {d, n, h, origin, std::move(v)};
}

double CartesianDensity::cell_volume() const { return std::pow(h_, d_); }

double CartesianDensity::mass() const { return cell_volume() * pairwise_sum(v_); }

double CartesianDensity::lp_integral(double p) const {
  std::vector<double> t(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) t[i] = std::pow(v_[i], p);
  return cell_volume() * pairwise_sum(t);
}

std::vector<double> CartesianDensity::cell_center(std::size_t index) const {
  std::vector<double> x(d_);
  for (int a = d_ - 1; a >= 0; --a) {
    x[a] = origin_ + h_ * (double(index % n_) + 0.5);
    index /= n_;
  }
  return x;
}

CartesianDensity CartesianDensity::scaled(double c) const {
  std::vector<double> v = v_;
  for (auto& x : v) x *= c;
  return {d_, n_, h_, origin_, std::move(v)};
}

}  // namespace hardylab
