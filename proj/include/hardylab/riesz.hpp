#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "hardylab/core.hpp"
#include "hardylab/density.hpp"

namespace hardylab {

/// |x|^-lambda on R^d with 0 < lambda < d.
class RieszKernel {
 public:
  RieszKernel(int d, double lambda);
  int dim() const { return d_; }
  double lambda() const { return lambda_; }
  double operator()(double r) const;

 private:
  int d_;
  double lambda_;
};

/// Quadratic form of D_lambda on a fixed radial grid: D = v^T W v / 2 for
/// nodal values v. Assembled once, O(n^2) per evaluation afterwards.
class RadialRieszOperator {
 public:
  RadialRieszOperator(int d, const std::vector<double>& radii, double lambda);

  const Eigen::MatrixXd& matrix() const { return W_; }
  double lambda() const { return lambda_; }
  double energy(std::span<const double> v) const;
  /// W v, the derivative of the energy with respect to the nodal values.
  std::vector<double> gradient(std::span<const double> v) const;

 private:
  double lambda_;
  Eigen::MatrixXd W_;
};

/// D_lambda[rho] = 1/2 int int rho(x) rho(x') |x - x'|^-lambda dx dx'.
double riesz_energy(const RadialDensity& rho, const RieszKernel& k);
/// Cell-pair summation with the kernel averaged exactly over each pair of
/// cells; the singular near-diagonal averages come from Duffy-type rules.
double riesz_energy(const CartesianDensity& rho, const RieszKernel& k);

/// Average of |o + z|^-lambda against the tent weight prod(1 - |z_i|) on
/// [-1, 1]^d, i.e. the interaction of two unit cells at integer offset o.
double cell_pair_kernel(int d, double lambda, std::span<const int> offset);

/// Sum over pairs of |X_n - X_m|^-lambda; coincident points are an error.
double pair_interaction(const PointConfig& X, const RieszKernel& k);

/// int_0^inf r^{-d-lambda-1} |B_r(y) cap B_r(y')| dr for |y - y'| = D,
/// by adaptive quadrature.
double fdll_ball_integral(const RieszKernel& k, double D);
/// Normalizing constant c with |y - y'|^-lambda = c * fdll_ball_integral.
double fdll_constant(const RieszKernel& k, double calibration_distance = 1.0);

inline constexpr int kFdllDefaultResolution = 512;

/// |y - y'|^-lambda rebuilt from the ball decomposition with the radial
/// integral discretized by a midpoint rule of `resolution` panels.
double fdll_reconstruct(std::span<const double> y, std::span<const double> yp, const RieszKernel& k,
                        int resolution = kFdllDefaultResolution);

struct SublevelVolume {
  double measured;
  double bound;
  double std_error;
};

/// Volume of {y : delta_R(y) < threshold} against the union bound
/// omega_d K threshold^d. The estimator samples the union of balls through
/// its covering (pick a ball, sample inside it, count the point only for the
/// first ball that contains it), so measured <= bound for every sample.
SublevelVolume sublevel_volume(const PointConfig& R, double threshold, std::size_t samples, Rng& rng);

/// Uniform point in the unit ball of R^d.
std::vector<double> uniform_in_ball(int d, Rng& rng);

}  // namespace hardylab
