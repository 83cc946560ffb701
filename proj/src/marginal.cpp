#include "hardylab/marginal.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "hardylab/quadrature.hpp"
#include "hardylab/special.hpp"

namespace hardylab {

GaussianMixture::GaussianMixture(int d, std::vector<double> weights, std::vector<double> centers,
                                 std::vector<double> sigmas)
    : d_(d), w_(std::move(weights)), c_(std::move(centers)), sig_(std::move(sigmas)) {
  if (d_ < 1) throw ParamError("GaussianMixture: dimension must be >= 1");
  if (w_.empty()) throw ParamError("GaussianMixture: need at least one component");
  if (c_.size() != w_.size() * std::size_t(d_) || sig_.size() != w_.size()) {
    throw ParamError("GaussianMixture: size mismatch");
  }
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (!(w_[i] > 0.0) || !std::isfinite(w_[i])) throw ParamError("GaussianMixture: weights must be positive");
    if (!(sig_[i] > 0.0) || !std::isfinite(sig_[i])) throw ParamError("GaussianMixture: sigmas must be positive");
  }
  for (double c : c_) {
    if (!std::isfinite(c)) throw ParamError("GaussianMixture: non-finite center");
  }
}

GaussianMixture GaussianMixture::random(int d, double mass, int max_components, double spread, double sigma_lo,
                                        double sigma_hi, Rng& rng) {
  std::uniform_int_distribution<int> kdist(1, max_components);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int k = kdist(rng);
  std::vector<double> w(k), c(std::size_t(k) * d), sg(k);
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    w[i] = 0.2 + u(rng);
    total += w[i];
    for (int a = 0; a < d; ++a) c[std::size_t(i) * d + a] = spread * (2.0 * u(rng) - 1.0);
    sg[i] = sigma_lo * std::pow(sigma_hi / sigma_lo, u(rng));
  }
  for (auto& x : w) x *= mass / total;
  return {d, std::move(w), std::move(c), std::move(sg)};
}

double GaussianMixture::mass() const { return pairwise_sum(w_); }

double GaussianMixture::operator()(std::span<const double> x) const {
  double v = 0.0;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    double r2 = 0.0;
    for (int a = 0; a < d_; ++a) {
      const double t = x[a] - c_[i * d_ + a];
      r2 += t * t;
    }
    const double s2 = sig_[i] * sig_[i];
    v += w_[i] * std::exp(-0.5 * r2 / s2) * std::pow(2.0 * std::numbers::pi * s2, -0.5 * d_);
  }
  return v;
}

void GaussianMixture::sample(Rng& rng, std::span<double> out) const {
  std::discrete_distribution<std::size_t> pick(w_.begin(), w_.end());
  std::normal_distribution<double> g(0.0, 1.0);
  const std::size_t i = pick(rng);
  for (int a = 0; a < d_; ++a) out[a] = c_[i * d_ + a] + sig_[i] * g(rng);
}

GaussianMixture GaussianMixture::operator+(const GaussianMixture& o) const {
  if (o.d_ != d_) throw ParamError("GaussianMixture: dimension mismatch");
  auto w = w_;
  auto c = c_;
  auto s = sig_;
  w.insert(w.end(), o.w_.begin(), o.w_.end());
  c.insert(c.end(), o.c_.begin(), o.c_.end());
  s.insert(s.end(), o.sig_.begin(), o.sig_.end());
  return {d_, std::move(w), std::move(c), std::move(s)};
}

GaussianMixture GaussianMixture::dilated(double t) const {
  if (!(t > 0.0)) throw ParamError("GaussianMixture: dilation must be positive");
  auto c = c_;
  auto s = sig_;
  for (auto& x : c) x *= t;
  for (auto& x : s) x *= t;
  return {d_, w_, std::move(c), std::move(s)};
}

double GaussianMixture::potential(std::span<const double> R, double lambda) const {
  double v = 0.0;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    double r2 = 0.0;
    for (int a = 0; a < d_; ++a) {
      const double t = R[a] - c_[i * d_ + a];
      r2 += t * t;
    }
    v += w_[i] * gaussian_inverse_moment(d_, lambda, std::sqrt(r2), sig_[i]);
  }
  return v;
}

double GaussianMixture::riesz_energy(double lambda) const {
  std::vector<double> terms;
  terms.reserve(w_.size() * w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) {
    for (std::size_t j = 0; j < w_.size(); ++j) {
      double r2 = 0.0;
      for (int a = 0; a < d_; ++a) {
        const double t = c_[i * d_ + a] - c_[j * d_ + a];
        r2 += t * t;
      }
      const double sg = std::sqrt(sig_[i] * sig_[i] + sig_[j] * sig_[j]);
      terms.push_back(0.5 * w_[i] * w_[j] * gaussian_inverse_moment(d_, lambda, std::sqrt(r2), sg));
    }
  }
  return pairwise_sum(terms);
}

double GaussianMixture::lp_integral(double p, std::size_t samples, Rng& rng) const {
  if (samples == 0) throw ParamError("lp_integral: need samples > 0");
  const double m = mass();
  std::vector<double> x(d_);
  std::vector<double> v(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    sample(rng, x);
    v[k] = std::pow((*this)(x), p - 1.0);
  }
  return m * pairwise_sum(v) / double(samples);
}

GaussianMixture ProductMeasure::marginal() const {
  if (factors.empty()) throw ParamError("ProductMeasure: no factors");
  GaussianMixture m = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) m = m + factors[i];
  return m;
}

}  // namespace hardylab
