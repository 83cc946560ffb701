#pragma once

#include <span>
#include <vector>

#include "hardylab/core.hpp"

namespace hardylab {

/// Finite mixture of isotropic Gaussians on R^d with total mass sum(weights).
/// Riesz-type integrals against it have closed forms through 1F1.
class GaussianMixture {
 public:
  GaussianMixture(int d, std::vector<double> weights, std::vector<double> centers, std::vector<double> sigmas);

  /// Between 1 and max_components components of total mass `mass`, centers
  /// uniform in [-spread, spread]^d, sigmas log-uniform in [sigma_lo, sigma_hi].
  static GaussianMixture random(int d, double mass, int max_components, double spread, double sigma_lo,
                                double sigma_hi, Rng& rng);

  int dim() const { return d_; }
  std::size_t components() const { return w_.size(); }
  double weight(std::size_t i) const { return w_[i]; }
  std::span<const double> center(std::size_t i) const { return {c_.data() + i * d_, std::size_t(d_)}; }
  double sigma(std::size_t i) const { return sig_[i]; }
  double mass() const;

  double operator()(std::span<const double> x) const;
  /// Draw from the normalized mixture.
  void sample(Rng& rng, std::span<double> out) const;

  /// Sum of the two mixtures (masses add).
  GaussianMixture operator+(const GaussianMixture& o) const;
  /// x -> rho(x / t) t^-d: same mass, length scale t.
  GaussianMixture dilated(double t) const;

  /// int rho(y) |y - R|^-lambda dy
  double potential(std::span<const double> R, double lambda) const;
  /// D_lambda[rho] = 1/2 int int rho rho' |y - y'|^-lambda
  double riesz_energy(double lambda) const;
  /// int rho^p, by Monte Carlo over the normalized mixture (unbiased).
  double lp_integral(double p, std::size_t samples, Rng& rng) const;

 private:
  int d_;
  std::vector<double> w_;
  std::vector<double> c_;
  std::vector<double> sig_;
};

/// Product probability measure mu = rho_1 x ... x rho_M on R^{dM} with
/// normalized one-body factors. Its summed marginal rho_mu is the mixture sum.
struct ProductMeasure {
  std::vector<GaussianMixture> factors;

  int dim() const { return factors.front().dim(); }
  std::size_t particles() const { return factors.size(); }
  GaussianMixture marginal() const;
};

}  // namespace hardylab
