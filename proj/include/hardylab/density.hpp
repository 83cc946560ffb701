#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hardylab {

/// One piece of a radial grid. On [lo, hi] the profile is linear between the
/// nodal values at `left` and `right`; the innermost piece [0, r_0] has
/// left == right == 0 and is constant.
struct RadialSegment {
  double lo, hi;
  std::size_t left, right;

  double shape_left(double r) const { return left == right ? 1.0 : (hi - r) / (hi - lo); }
  double shape_right(double r) const { return left == right ? 0.0 : (r - lo) / (hi - lo); }
};

/// Radial density on R^d: continuous piecewise-linear in r on [0, r_max],
/// constant on [0, r_0], zero beyond r_max.
class RadialDensity {
 public:
  RadialDensity(int d, std::vector<double> radii, std::vector<double> values);

  /// n log-spaced radii on [r_min, r_max].
  static std::vector<double> log_grid(std::size_t n, double r_min, double r_max);
  static RadialDensity from_function(int d, std::vector<double> radii,
                                     const std::function<double(double)>& f);

  int dim() const { return d_; }
  std::size_t size() const { return r_.size(); }
  const std::vector<double>& radii() const { return r_; }
  const std::vector<double>& values() const { return v_; }
  double r_max() const { return r_.back(); }

  double operator()(double r) const;
  double mass() const;
  /// Integral of rho^p over R^d, evaluated on the interpolant.
  double lp_integral(double p) const;
  /// Derivative of lp_integral(p) with respect to each nodal value.
  std::vector<double> lp_gradient(double p) const;
  /// Exact integral of each hat function over R^d.
  const std::vector<double>& mass_weights() const { return w_; }

  std::vector<RadialSegment> segments() const;

  RadialDensity with_values(std::vector<double> values) const;
  /// rho_t(x) = t^d rho(t x).
  RadialDensity dilated(double t) const;
  RadialDensity scaled(double c) const;

 private:
  int d_;
  std::vector<double> r_;
  std::vector<double> v_;
  std::vector<double> w_;
};

/// Density on a cubic Cartesian grid of n^d cells of side h, piecewise
/// constant per cell. Cells are indexed row-major with the last axis fastest.
class CartesianDensity {
 public:
  CartesianDensity(int d, std::size_t n, double h, double origin, std::vector<double> values);
  /// Cell-center sampling of f on [origin, origin + n h]^d.
  static CartesianDensity sample(int d, std::size_t n, double h, double origin,
                                 const std::function<double(std::span<const double>)>& f);

  int dim() const { return d_; }
  std::size_t cells_per_axis() const { return n_; }
  double spacing() const { return h_; }
  double origin() const { return origin_; }
  const std::vector<double>& values() const { return v_; }

  double cell_volume() const;
  double mass() const;
  double lp_integral(double p) const;
  std::vector<double> cell_center(std::size_t index) const;
  CartesianDensity scaled(double c) const;

 private:
  int d_;
  std::size_t n_;
  double h_;
  double origin_;
  std::vector<double> v_;
};

}  // namespace hardylab
