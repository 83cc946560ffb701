#pragma once

#include <functional>
#include <span>
#include <vector>

namespace hardylab {

struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};

/// n-point Gauss-Legendre rule on [-1, 1]; cached per n.
const Rule& gauss_legendre(int n);

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
  bool converged = false;
};

struct QuadOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-11;
  int max_intervals = 4000;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on [a, b]. Interior
/// breakpoints split the initial partition, which helps with kinks and
/// integrable endpoint singularities placed at known locations.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const QuadOptions& opts = {}, std::span<const double> breakpoints = {});

/// Same, but throws NumericalError when the tolerance is not met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opts = {}, std::span<const double> breakpoints = {});

/// Pairwise (cascade) summation; deterministic and order-stable.
double pairwise_sum(std::span<const double> v);

/// Geometric breakpoints a + (b - a) * ratio^k, k = 1..count, clustering at a.
std::vector<double> geometric_breakpoints(double a, double b, double ratio, int count);

}  // namespace hardylab
