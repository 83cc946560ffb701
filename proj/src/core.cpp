#include "hardylab/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hardylab/special.hpp"

namespace hardylab {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer applied to a golden-ratio stride
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Params::Params(int d, double s, bool allow_borderline, bool decay)
    : d_(d), s_(s), allow_borderline_(allow_borderline), decay_condition_(decay) {}

Params validate_params(int d, double s, bool allow_borderline) {
  if (d < 1) throw ParamError("dimension d must be >= 1");
  if (!(s > 0.0) || !std::isfinite(s)) throw ParamError("order s must be > 0");
  if (s > 1.0) throw ParamError("order s must be <= 1");
  const double twice = 2.0 * s;
  const bool borderline = std::abs(twice - d) <= 1e-12 * d;
  if (borderline) {
    if (!allow_borderline) throw ParamError("borderline d = 2s is not admitted");
    s = 0.5 * d;
  } else if (twice > d) {
    throw ParamError("s >= d/2 is outside the admitted range");
  }
  const bool decay = 2.0 * s * s - s * (d - 2.0) + d > 0.0;
  Params p(d, s, allow_borderline, decay);
  if (!borderline && !(p.remainder_exponent() > 0.0)) {
    throw ParamError("remainder exponent must be positive");
  }
  return p;
}

double c_tf(const Params& p) {
  if (p.borderline()) throw ParamError("c_tf requires d > 2s");
  return semiclassical_constant(p.d(), p.s());
}

double semiclassical_constant(int d_, double s) {
  if (d_ < 1 || !(s > 0.0)) throw ParamError("semiclassical_constant: need d >= 1, s > 0");
  const double d = d_;
  return std::pow(4.0 * std::numbers::pi, s) / (1.0 + 2.0 * s / d) *
         std::pow(gamma(1.0 + 0.5 * d), 2.0 * s / d);
}

double unit_ball_volume(int d) {
  return std::pow(std::numbers::pi, 0.5 * d) / gamma(1.0 + 0.5 * d);
}

double sphere_area(int d) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / gamma(0.5 * d);
}

PointConfig::PointConfig(int d, std::vector<double> coords) : d_(d), coords_(std::move(coords)) {
  if (d_ < 1) throw ParamError("PointConfig: dimension must be >= 1");
  if (coords_.empty() || coords_.size() % d_ != 0) {
    throw ParamError("PointConfig: need K >= 1 points with d coordinates each");
  }
}

PointConfig::PointConfig(int d, std::initializer_list<std::initializer_list<double>> pts) : d_(d) {
  for (const auto& p : pts) {
    if (static_cast<int>(p.size()) != d) throw ParamError("PointConfig: wrong coordinate count");
    coords_.insert(coords_.end(), p.begin(), p.end());
  }
  if (coords_.empty()) throw ParamError("PointConfig: need K >= 1 points");
}

void PointConfig::require_distinct() const {
  for (std::size_t k = 0; k < size(); ++k) {
    for (std::size_t l = k + 1; l < size(); ++l) {
      if (distance((*this)[k], (*this)[l]) == 0.0) {
        throw ParamError("PointConfig: coincident points " + std::to_string(k) + " and " +
                         std::to_string(l));
      }
    }
  }
}

PointConfig PointConfig::scaled(double t) const {
  std::vector<double> c = coords_;
  for (auto& x : c) x *= t;
  return {d_, std::move(c)};
}

PointConfig PointConfig::translated(std::span<const double> shift) const {
  std::vector<double> c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += shift[i % d_];
  return {d_, std::move(c)};
}

double distance(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double t = a[i] - b[i];
    acc += t * t;
  }
  return std::sqrt(acc);
}

double nearest_distance(const PointConfig& R, std::span<const double> y) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < R.size(); ++k) best = std::min(best, distance(R[k], y));
  return best;
}

double nearest_neighbor_distance(const PointConfig& R, std::size_t k) {
  if (R.size() < 2) throw ParamError("delta_k needs at least two points");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < R.size(); ++l) {
    if (l != k) best = std::min(best, distance(R[k], R[l]));
  }
  return best;
}

double pair_sum(const PointConfig& R, double lambda) {
  double acc = 0.0;
  for (std::size_t k = 0; k < R.size(); ++k) {
    for (std::size_t l = k + 1; l < R.size(); ++l) {
      const double r = distance(R[k], R[l]);
      if (r == 0.0) throw ParamError("pair_sum: coincident points");
      acc += std::pow(r, -lambda);
    }
  }
  return acc;
}

VoronoiPotentials::VoronoiPotentials(PointConfig R, double s) : R_(std::move(R)), s_(s) {
  if (R_.size() < 2) throw ParamError("Voronoi potentials need K >= 2");
  R_.require_distinct();
  U_ = pair_sum(R_, 2.0 * s_);
  for (std::size_t k = 0; k < R_.size(); ++k) {
    U_ += std::pow(nearest_neighbor_distance(R_, k), -2.0 * s_);
  }
}

double VoronoiPotentials::V(std::span<const double> y) const {
  // The nearest center is dropped from the sum instead of subtracted, so the
  // value stays finite and nonnegative at the centers themselves.
  std::size_t nearest = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < R_.size(); ++k) {
    const double r = distance(R_[k], y);
    if (r < best) {
      best = r;
      nearest = k;
    }
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < R_.size(); ++k) {
    if (k != nearest) acc += std::pow(distance(R_[k], y), -2.0 * s_);
  }
  return acc;
}

VoronoiPotentials voronoi_potentials(const PointConfig& R, const Params& p) {
  return {R, p.s()};
}

}  // namespace hardylab
