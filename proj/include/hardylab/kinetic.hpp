#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace hardylab {

/// Constant C in ||(-Delta)^{s/2} f||^2 = (C/2) int int |f(x) - f(y)|^2 |x - y|^{-d-2s},
/// valid for 0 < s < 1: C = 4^s Gamma(d/2 + s) / (pi^{d/2} |Gamma(-s)|).
double gagliardo_constant(int d, double s);

/// Quadratic form of ||(-Delta)^{s/2} f||^2 for radial f on a fixed grid,
/// T = f^T K f. The profile is piecewise linear on the grid, constant on
/// [0, r_0], and closed by a linear ramp to zero over one extra cell past the
/// last radius. s = 1 is the exact Dirichlet form; s < 1 uses the double
/// integral of squared differences reduced to two radial variables.
class RadialKineticOperator {
 public:
  RadialKineticOperator(int d, const std::vector<double>& radii, double s);

  const Eigen::MatrixXd& matrix() const { return K_; }
  double energy(std::span<const double> f) const;
  std::vector<double> gradient(std::span<const double> f) const;

 private:
  Eigen::MatrixXd K_;
};

double fractional_kinetic(int d, const std::vector<double>& radii, std::span<const double> f, double s);

/// Cartesian layout: f sampled at n^d points of spacing h (row-major, last
/// axis fastest), zero padded to padding * n per axis (padding >= 2) and
/// transformed with a DFT. The frequency sum misses the cusp of |xi|^{2s} at
/// the origin by O(dxi^{1+2s}), so small s wants generous padding.
double fractional_kinetic_cartesian(int d, std::size_t n, double h, std::span<const double> f, double s,
                                    int padding = 8);

}  // namespace hardylab
