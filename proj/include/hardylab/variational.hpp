#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hardylab/core.hpp"
#include "hardylab/density.hpp"
#include "hardylab/kinetic.hpp"
#include "hardylab/riesz.hpp"

namespace hardylab {

enum class FunctionalKind { tau, omega };

std::string to_string(FunctionalKind k);

struct GridSpec {
  std::size_t n = 512;
  double r_min = 1e-3;
  double r_max = 50.0;

  std::vector<double> radii() const { return RadialDensity::log_grid(n, r_min, r_max); }
};

struct FunctionalSpec {
  FunctionalKind kind;
  Params params;
  GridSpec grid;
};

/// int rho^{1+2s/d} (int rho)^{1-2s/d} / D_{2s}[rho].
double tau_objective(const RadialDensity& rho, const Params& p);
/// ||(-Delta)^{s/2} sqrt(rho)||^2 ||rho||_1 / D_{2s}[rho].
double omega_objective(const RadialDensity& rho, const Params& p);

/// The tau or omega objective on a fixed radial grid, in the log-density
/// variables u = ln rho. Operators are assembled once per grid.
class SemiclassicalFunctional {
 public:
  SemiclassicalFunctional(FunctionalKind kind, const Params& p, const std::vector<double>& radii);

  FunctionalKind kind() const { return kind_; }
  const Params& params() const { return p_; }
  const std::vector<double>& radii() const { return radii_; }

  /// Objective value at nodal densities rho.
  double value(std::span<const double> rho) const;
  /// ln(objective) at rho = exp(u); fills grad with d ln(objective) / du.
  double log_value(std::span<const double> u, std::vector<double>* grad) const;

  /// Symmetric positive definite approximation of the Hessian of
  /// ln(objective) in u: mass fractions on the diagonal, plus the kinetic
  /// form for omega (tridiagonal when s = 1, its diagonal otherwise).
  struct Metric {
    std::vector<double> diag;
    std::vector<double> off;  // empty unless tridiagonal
    /// v <- Metric^{-1} v
    void solve(std::vector<double>& v) const;
  };
  Metric metric(std::span<const double> u) const;

 private:
  FunctionalKind kind_;
  Params p_;
  std::vector<double> radii_;
  RadialDensity shape_;
  RadialRieszOperator riesz_;
  std::unique_ptr<RadialKineticOperator> kinetic_;
};

struct OptimizerOptions {
  double tol = 1e-9;
  int max_iterations = 6000;
  int memory = 10;
  /// Consecutive accepted steps with relative decrease below tol needed to stop.
  int patience = 5;
  /// Cap on max_i |delta u_i| per step.
  double max_step = 2.0;
};

struct OptimizerResult {
  FunctionalKind kind;
  double value = 0.0;
  RadialDensity density;
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
  bool normalized = false;
  /// Objective after every accepted step, starting with the initial value.
  std::vector<double> history;
};

/// Quasi-Newton (L-BFGS) descent on u = ln rho with a backtracking Armijo
/// line search, so every accepted step lowers the objective. For the tau
/// functional the result is rescaled and dilated to int rho = int rho^q = 1.
OptimizerResult minimize_functional(const FunctionalSpec& spec, const RadialDensity& init,
                                    const OptimizerOptions& opts = {});

/// Standard Gaussian on the given radii.
RadialDensity gaussian_density(int d, std::vector<double> radii, double sigma = 1.0);
/// Indicator of the ball of radius R, floored at `floor` outside so that the
/// log-density stays finite.
RadialDensity ball_density(int d, std::vector<double> radii, double R, double floor = 1e-12);

/// c rho(x / l) with c, l chosen so that int rho = int rho^{1+2s/d} = 1.
RadialDensity normalize_tau_density(const RadialDensity& rho, const Params& p);

/// omega_hat / (N - 1).
double bosonic_upper_bound(int N, double omega_hat);

}  // namespace hardylab
