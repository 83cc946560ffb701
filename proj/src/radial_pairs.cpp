#include "hardylab/radial_pairs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardylab/core.hpp"
#include "hardylab/quadrature.hpp"

namespace hardylab {

RadialKernel::RadialKernel(int d, double lambda)
    : d_(d), lambda_(lambda), area_(sphere_area(d)), angular_(&angular_factor(d, lambda)) {}

double RadialKernel::operator()(double r, double rp, double delta) const {
  if (!(delta > 0.0)) return std::numeric_limits<double>::infinity();
  const double mx = std::max(r, rp);
  double v = area_ * std::pow(mx, -lambda_) * angular_->at_u(std::log(mx / delta));
  if (d_ > 1) v *= std::pow(r * rp, d_ - 1);
  return v;
}

namespace {

constexpr int kGradedPoints = 10;
constexpr int kInnerPoints = 8;

int grading_power(double sigma, double room) {
  // integrand ~ v^{p * room - 1} after the substitution; aim for >= 2
  const double slack = room - std::max(sigma, 0.0);
  return std::clamp(static_cast<int>(std::ceil(3.0 / slack)), 2, 40);
}

void same_segment(const RadialSegment& s, double sigma, std::vector<PairNode>& out) {
  const double h = s.hi - s.lo;
  const int p = grading_power(sigma, 1.0);
  const Rule& go = gauss_legendre(kGradedPoints);
  const Rule& gi = gauss_legendre(kInnerPoints);
  for (int i = 0; i < kGradedPoints; ++i) {
    const double v = 0.5 * (go.x[i] + 1.0);
    const double delta = h * std::pow(v, p);
    const double jd = 0.5 * go.w[i] * h * p * std::pow(v, p - 1);
    const double len = h - delta;
    for (int j = 0; j < kInnerPoints; ++j) {
      const double r = s.lo + delta + len * 0.5 * (gi.x[j] + 1.0);
      const double w = jd * 0.5 * gi.w[j] * len;
      out.push_back({r, r - delta, delta, w});
      out.push_back({r - delta, r, delta, w});
    }
  }
}

// lower = [a, b], upper = [b, c]; r in lower when lower_first, else swapped.
void adjacent_segments(const RadialSegment& lower, const RadialSegment& upper, bool lower_first,
                       double sigma, std::vector<PairNode>& out) {
  const double b = lower.hi;
  const double ha = lower.hi - lower.lo;
  const double hb = upper.hi - upper.lo;
  const int p = grading_power(sigma, 2.0);
  const Rule& go = gauss_legendre(kGradedPoints);
  const Rule& gi = gauss_legendre(kInnerPoints);
  auto emit = [&](double x, double y, double w) {
    const double r_lo = b - x;
    const double r_up = b + y;
    if (lower_first) {
      out.push_back({r_lo, r_up, x + y, w});
    } else {
      out.push_back({r_up, r_lo, x + y, w});
    }
  };
  for (int i = 0; i < kGradedPoints; ++i) {
    const double v = 0.5 * (go.x[i] + 1.0);
    const double xi = std::pow(v, p);
    const double jx = 0.5 * go.w[i] * p * std::pow(v, p - 1);
    for (int j = 0; j < kInnerPoints; ++j) {
      const double eta = 0.5 * (gi.x[j] + 1.0);
      const double w = jx * 0.5 * gi.w[j] * ha * hb * xi;
      emit(ha * xi, hb * xi * eta, w);
      emit(ha * xi * eta, hb * xi, w);
    }
  }
}

void separated_segments(const RadialSegment& a, const RadialSegment& b, std::vector<PairNode>& out) {
  const double gap = std::max(a.lo, b.lo) - std::min(a.hi, b.hi);
  const double ratio = gap / std::max(a.hi - a.lo, b.hi - b.lo);
  const int m = ratio < 1.0 ? 16 : (ratio < 4.0 ? 10 : 6);
  const Rule& g = gauss_legendre(m);
  const double ca = 0.5 * (a.lo + a.hi);
  const double ha = 0.5 * (a.hi - a.lo);
  const double cb = 0.5 * (b.lo + b.hi);
  const double hb = 0.5 * (b.hi - b.lo);
  for (int i = 0; i < m; ++i) {
    const double r = ca + ha * g.x[i];
    for (int j = 0; j < m; ++j) {
      const double rp = cb + hb * g.x[j];
      out.push_back({r, rp, std::fabs(r - rp), ha * hb * g.w[i] * g.w[j]});
    }
  }
}

}  // namespace

void segment_pair_nodes(const RadialSegment& a, const RadialSegment& b, double sigma,
                        std::vector<PairNode>& out) {
  if (a.lo == b.lo && a.hi == b.hi) {
    same_segment(a, sigma, out);
  } else if (a.hi == b.lo) {
    adjacent_segments(a, b, true, sigma, out);
  } else if (b.hi == a.lo) {
    adjacent_segments(b, a, false, sigma, out);
  } else {
    separated_segments(a, b, out);
  }
}

}  // namespace hardylab
