#pragma once

#include <vector>

#include "hardylab/density.hpp"

namespace hardylab {

/// Spherical average of |r e - r' e'|^-lambda, in the form
///   A(t) = |S^{d-2}| * int_0^pi ((1-t)^2 + 4 t sin^2(theta/2))^{-lambda/2} sin^{d-2}(theta) dtheta
/// with t = min(r, r') / max(r, r'), so that
///   int_{S^{d-1}} int_{S^{d-1}} |r e - r' e'|^-lambda de de' = |S^{d-1}| max^-lambda A(t).
/// For d = 1 the "sphere" is {+1, -1} and A(t) = (1-t)^-lambda + (1+t)^-lambda.
///
/// Tabulated on u = ln(1 / (1 - t)) so that the t -> 1 behavior, a power of
/// 1 - t, becomes linear in u. Any lambda > 0 is accepted; lambda >= d - 1
/// makes A singular at t = 1.
class AngularFactor {
 public:
  AngularFactor(int d, double lambda);
  /// A at t = 1 - exp(-u).
  double at_u(double u) const;
  /// Direct evaluation by adaptive quadrature (used to build the table).
  static double evaluate(int d, double lambda, double u);

 private:
  int d_;
  double lambda_;
  double du_;
  std::vector<double> log_table_;
};

/// Shared instance per (d, lambda).
const AngularFactor& angular_factor(int d, double lambda);

/// Radial two-point kernel G(r, r') such that
///   int int F(|x|, |y|) |x - y|^-lambda dx dy = int_0^inf int_0^inf F(r, r') G(r, r') dr dr'.
/// `delta` must equal |r - r'| and is passed separately to keep it exact when
/// r and r' are close.
class RadialKernel {
 public:
  RadialKernel(int d, double lambda);
  double operator()(double r, double rp, double delta) const;
  int dim() const { return d_; }
  double lambda() const { return lambda_; }

 private:
  int d_;
  double lambda_;
  double area_;
  const AngularFactor* angular_;
};

struct PairNode {
  double r, rp, delta, w;
};

/// Quadrature nodes for (r, r') in a x b. `sigma` is the strength of the
/// integrand singularity along r = r' (integrand ~ |r - r'|^-sigma); same
/// and adjacent segments get graded rules adapted to it.
void segment_pair_nodes(const RadialSegment& a, const RadialSegment& b, double sigma,
                        std::vector<PairNode>& out);

}  // namespace hardylab
