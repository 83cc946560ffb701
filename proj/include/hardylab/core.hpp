#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hardylab {

/// Raised for arguments outside an operation's domain (CLI exit code 2).
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure fails to deliver its stated accuracy
/// (CLI exit code 3).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

/// Decorrelated child seed for trial `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Validated pair (d, s).
///
/// Admitted range is 0 < s < d/2 with s <= 1. The borderline d = 2s is only
/// admitted with `allow_borderline`, which is meant for the two-dimensional
/// Slater pipeline.
class Params {
 public:
  int d() const { return d_; }
  double s() const { return s_; }
  bool allow_borderline() const { return allow_borderline_; }
  bool borderline() const { return 2.0 * s_ == static_cast<double>(d_); }

  /// 1 + 2s/d, the Thomas-Fermi exponent.
  double q() const { return 1.0 + 2.0 * s_ / d_; }
  /// s(d - 2s)/d^2, the exponent of the relative remainder.
  double remainder_exponent() const { return s_ * (d_ - 2.0 * s_) / (double(d_) * d_); }
  /// Riesz exponent 2s of the pair interaction.
  double lambda() const { return 2.0 * s_; }
  /// Whether 2s^2 - s(d-2) + d > 0 holds.
  bool decay_condition() const { return decay_condition_; }

  friend Params validate_params(int d, double s, bool allow_borderline);

 private:
  Params(int d, double s, bool allow_borderline, bool decay);
  int d_;
  double s_;
  bool allow_borderline_;
  bool decay_condition_;
};

Params validate_params(int d, double s, bool allow_borderline = false);

/// (4 pi)^s / (1 + 2s/d) * Gamma(1 + d/2)^(2s/d). Requires d > 2s.
double c_tf(const Params& p);
/// The same expression without the d > 2s precondition; for d = 2s it is
/// still the coefficient of int_{|eta| < k} |eta|^{2s} d eta / (2 pi)^d in
/// terms of the density, which the borderline trial states need.
double semiclassical_constant(int d, double s);

/// Volume of the unit ball in R^d.
double unit_ball_volume(int d);
/// Surface area |S^{d-1}| of the unit sphere in R^d (2 for d = 1).
double sphere_area(int d);

/// K points in R^d stored contiguously.
class PointConfig {
 public:
  PointConfig(int d, std::vector<double> coords);
  PointConfig(int d, std::initializer_list<std::initializer_list<double>> pts);

  int dim() const { return d_; }
  std::size_t size() const { return coords_.size() / d_; }
  std::span<const double> operator[](std::size_t k) const {
    return {coords_.data() + k * d_, static_cast<std::size_t>(d_)};
  }
  const std::vector<double>& coords() const { return coords_; }

  /// Throws ParamError if two points coincide.
  void require_distinct() const;
  PointConfig scaled(double t) const;
  PointConfig translated(std::span<const double> shift) const;

 private:
  int d_;
  std::vector<double> coords_;
};

double distance(std::span<const double> a, std::span<const double> b);

/// delta_R(y) = min_k |y - R_k|.
double nearest_distance(const PointConfig& R, std::span<const double> y);
/// delta_k(R) = min_{l != k} |R_k - R_l|. Needs at least two points.
double nearest_neighbor_distance(const PointConfig& R, std::size_t k);
/// Sum over k < l of |R_k - R_l|^-lambda.
double pair_sum(const PointConfig& R, double lambda);

/// Voronoi-subtracted potential and its companion constant:
///   V_R(y) = sum_k |y - R_k|^-2s - delta_R(y)^-2s,
///   U_R    = sum_{k<l} |R_k - R_l|^-2s + sum_k delta_k(R)^-2s.
class VoronoiPotentials {
 public:
  VoronoiPotentials(PointConfig R, double s);
  double V(std::span<const double> y) const;
  double U() const { return U_; }
  const PointConfig& points() const { return R_; }
  double s() const { return s_; }

 private:
  PointConfig R_;
  double s_;
  double U_;
};

VoronoiPotentials voronoi_potentials(const PointConfig& R, const Params& p);

}  // namespace hardylab
