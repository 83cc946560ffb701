#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "hardylab/core.hpp"

namespace hardylab {

/// One-dimensional normalized cos^2 bump on (-ell/2, ell/2):
/// zeta_1(t) = (2/ell) cos^2(pi t / ell). The d-dimensional mollifier is the
/// tensor product, so 1_{Q_L} * zeta factors into per-axis profiles F.
struct Mollifier {
  double ell;
  double mass = 1.0;  // int zeta_1; orthonormality needs 1

  double zeta(double t) const;
  /// int_{-inf}^t zeta_1
  double cdf(double t) const;
  /// F(t) = (1_{[-L/2, L/2]} * zeta_1)(t)
  double profile(double t, double L) const;
  double profile_derivative(double t, double L) const;
};

/// Plane waves on Q_L, smoothed at the edges, with momenta in (2 pi / L) Z^d.
class SlaterState {
 public:
  /// All lattice momenta with |p|^2 < mu, plus shell momenta |p|^2 = mu in
  /// lexicographic order of (|p|^2, p_1, ..., p_d) until `count` is reached
  /// (all of them when count is absent).
  static SlaterState build(int d, double L, double mu, std::optional<std::size_t> count = std::nullopt,
                           double ell_ratio = 1.0 / 32.0);
  /// The N lowest momenta in the same order; mu is the largest |p|^2 taken.
  static SlaterState with_particle_count(int d, double L, std::size_t N, double ell_ratio = 1.0 / 32.0);

  int dim() const { return d_; }
  double L() const { return L_; }
  double fermi_mu() const { return mu_; }
  double ell() const { return zeta_.ell; }
  std::size_t N() const { return n_.size() / d_; }
  const Mollifier& mollifier() const { return zeta_; }
  /// Integer coordinates of the k-th momentum; p = 2 pi n / L.
  std::span<const int> momentum_index(std::size_t k) const { return {n_.data() + k * d_, std::size_t(d_)}; }
  std::vector<double> momentum(std::size_t k) const;

  /// Replace the mollifier mass (for consistency checks of the normalization).
  SlaterState with_mollifier_mass(double m) const;

  /// F(x) = prod_i F(x_i), the smoothed box indicator.
  double box_profile(std::span<const double> x) const;
  /// rho_u(x) = N L^{-d} F(x)
  double density(std::span<const double> x) const;
  /// gamma_u(x, x') = L^{-d} sqrt(F(x) F(x')) sum_p e^{i p (x - x')}
  std::complex<double> density_matrix(std::span<const double> x, std::span<const double> xp) const;
  /// sum_p e^{i p r}
  std::complex<double> momentum_sum(std::span<const double> r) const;
  /// phi_p(x) for every momentum.
  void orbitals(std::span<const double> x, std::vector<std::complex<double>>& out) const;
  /// int F^p over R^d.
  double profile_power_integral(double p) const;

 private:
  SlaterState(int d, double L, double mu, std::vector<int> n, Mollifier z);
  int d_;
  double L_;
  double mu_;
  std::vector<int> n_;
  Mollifier zeta_;
};

/// <phi_p, phi_p'> by quadrature (the integral factors over axes).
std::complex<double> orbital_overlap(const SlaterState& st, std::size_t k, std::size_t kp);
/// max |G - I| over the full Gram matrix of the orbitals.
double gram_deviation(const SlaterState& st);

/// int rho_u over R^d by quadrature.
double slater_mass(const SlaterState& st);

/// sum_p ||(-Delta)^{s/2} phi_p||^2. s = 1 uses the exact split
/// |p|^2 + d L^{-1} int (sqrt F)'^2; s < 1 a frequency-lattice convolution.
double slater_kinetic(const SlaterState& st, const Params& p);
/// Same for any 0 < s <= 1 through the frequency convolution (no s = 1 shortcut).
double slater_kinetic_spectral(const SlaterState& st, double s);

struct SlaterInteraction {
  /// sum_{n<m} int |u|^2 |X_n - X_m|^{-2s} over all of R^d x R^d; finite
  /// even for 2s = d since the exchange hole cancels the singularity.
  double estimate;
  /// Same integrand restricted to Omega = {x, x' in Q_{L-ell}, sqrt(mu)|x-x'| > C};
  /// a lower bound since the integrand is nonnegative.
  double lower_bound;
  /// int int_Omega rho rho' |x-x'|^{-2s} (no factor 1/2).
  double direct_omega;
  /// int int_Omega |gamma|^2 |x-x'|^{-2s} (no factor 1/2).
  double exchange_omega;
  /// min over the r-grid of L^{-2d}(N^2 - |sum_p e^{ipr}|^2), the pair density
  /// rho rho' - |gamma|^2 where F = 1 on both points.
  double min_pair_density;
  double cutoff_C;
};

struct InteractionOptions {
  double cutoff_C = 4.0;
  /// grid points per shortest wavelength pi / sqrt(mu) of |S(r)|^2
  double points_per_wavelength = 8.0;
};

SlaterInteraction slater_interaction(const SlaterState& st, const Params& p, const InteractionOptions& opts = {});

struct HardyQuotient {
  double kinetic;
  SlaterInteraction interaction;
  /// kinetic / interaction.lower_bound
  double quotient;
};

HardyQuotient hardy_quotient(const SlaterState& st, const Params& p, const InteractionOptions& opts = {});

struct IEpsilon {
  double value;
  bool out_of_range;  // eps >= sqrt(2): no admissible pairs
};

/// int int_{Q_1 x Q_1} 1(|y - y'| >= eps) |y - y'|^-2 dy dy' in two dimensions.
IEpsilon i_epsilon(double eps);
/// int int_{Q_1 x Q_1} 1(|y - y'| >= eps) |y - y'|^-lambda over Q_1 in R^d, 1 <= d <= 3.
IEpsilon i_epsilon(int d, double lambda, double eps);

struct ExchangeBoundReport {
  /// sup over the sweep of |L^{-d} sum_p e^{ipr}| |r| / sqrt(mu)
  double sup;
  /// r where the sup is attained
  std::vector<double> argmax;
  std::size_t evaluations;
};

/// Sweep over C / sqrt(mu) <= |r| <= L/2 in d = 2.
ExchangeBoundReport exchange_lattice_bound(const SlaterState& st, double C = 4.0, int radii = 160,
                                           int angles = 96);

/// Exact sample of the N points of the determinantal measure |u|^2 / N!
/// (sequential projection-kernel algorithm, proposal rho_u / N). Returns the
/// positions row-major, N x d.
std::vector<double> sample_slater_points(const SlaterState& st, Rng& rng);

}  // namespace hardylab
