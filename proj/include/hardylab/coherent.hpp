#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hardylab/core.hpp"
#include "hardylab/density.hpp"

namespace hardylab {

struct CoherentDiagnostics {
  double min_eigenvalue;
  double max_eigenvalue;
  double trace;
  /// || rho_gamma - rho * |g|^2 ||_1, the reference convolution taken in
  /// closed form per cell (rho is piecewise constant).
  double density_l1_error;
  /// Tr (-Delta)^s gamma from the eigenpairs and a spectral Laplacian.
  double kinetic;
  /// N ||(-Delta)^{s/2} g||^2
  double g_kinetic;
  /// int (rho * |g|^2)^{1+2s/d} and int rho^{1+2s/d}
  double smeared_lp;
  double rho_lp;
  /// c_TF int (rho*|g|^2)^q + N ||(-Delta)^{s/2} g||^2 - kinetic
  double slack_smeared;
  /// c_TF int rho^q + N ||(-Delta)^{s/2} g||^2 - kinetic
  double slack_unsmeared;
};

/// Discretized coherent-state density matrix on the grid of a Cartesian
/// density (d = 1 or 2). The matrix acts on grid vectors: entry (i, j) is
/// h^d gamma(x_i, x_j).
struct CoherentGamma {
  Params params;
  double g_scale;
  /// (2 pi)^{2s} omega_d^{-2s/d}
  double c;
  CartesianDensity rho;
  Eigen::MatrixXd matrix;
  std::vector<double> density;  // rho_gamma at the grid points
  CoherentDiagnostics diagnostics;
};

/// g(x) = (pi ell^2)^{-d/4} exp(-|x|^2 / (2 ell^2)), even and L^2-normalized.
double coherent_profile(int d, double ell, double r2);

/// Builds gamma = int dy g_y P_{k(y)} g_y with k(y) = c^{1/2s} rho(y)^{1/d},
/// where P_k is the band-limiting projection on the lattice; this keeps
/// 0 <= gamma <= 1 exact up to the y-quadrature of int |g|^2. Throws
/// ParamError when the grid cannot resolve the largest k (k h >= pi) and
/// NumericalError when the spectrum leaves [-tol, 1 + tol].
CoherentGamma coherent_gamma(const CartesianDensity& rho, double g_scale, const Params& p, double tol = 1e-6);

}  // namespace hardylab
