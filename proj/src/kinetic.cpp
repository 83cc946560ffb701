#include "hardylab/kinetic.hpp"

#include <fftw3.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "hardylab/core.hpp"
#include "hardylab/quadrature.hpp"
#include "hardylab/radial_pairs.hpp"
#include "hardylab/special.hpp"

namespace hardylab {

double gagliardo_constant(int d, double s) {
  if (!(s > 0.0) || !(s < 1.0)) throw ParamError("gagliardo_constant: need 0 < s < 1");
  const double abs_gamma_neg = gamma(1.0 - s) / s;  // |Gamma(-s)|
  return std::pow(4.0, s) * gamma(0.5 * d + s) / (std::pow(std::numbers::pi, 0.5 * d) * abs_gamma_neg);
}

namespace {

struct Contribution {
  std::size_t node;
  double value;
};

// Nonzero hat functions of segment `seg` at r, summed per node.
int hats(const RadialSegment& seg, double r, std::array<Contribution, 2>& out) {
  if (seg.left == seg.right) {
    out[0] = {seg.left, 1.0};
    return 1;
  }
  out[0] = {seg.left, seg.shape_left(r)};
  out[1] = {seg.right, seg.shape_right(r)};
  return 2;
}

// T(r) = int_{r_end}^inf G(r, r') dr' for r < r_end.
double tail_potential(const RadialKernel& G, double r, double r_end, double s) {
  QuadOptions opts;
  opts.abs_tol = 0.0;
  opts.rel_tol = 1e-10;
  opts.max_intervals = 4000;
  const double gap = r_end - r;
  auto near = [&](double rp) { return G(r, rp, rp - r); };
  std::vector<double> bp;
  for (double x = gap; x < r_end; x *= 2.0) bp.push_back(r_end + x);
  const double a = integrate(near, r_end, 2.0 * r_end, opts, bp);
  // r' = 2 r_end z^{-1/(2s)} flattens the r'^{-1-2s} decay
  const double e = 1.0 / (2.0 * s);
  auto far = [&](double z) {
    if (z <= 0.0) z = 1e-300;
    const double rp = 2.0 * r_end * std::pow(z, -e);
    return G(r, rp, rp - r) * 2.0 * r_end * e * std::pow(z, -e - 1.0);
  };
  const double b = integrate(far, 0.0, 1.0, opts);
  return a + b;
}

}  // namespace

RadialKineticOperator::RadialKineticOperator(int d, const std::vector<double>& radii, double s) {
  if (d < 1) throw ParamError("kinetic: dimension must be >= 1");
  if (!(s > 0.0) || s > 1.0) throw ParamError("kinetic: need 0 < s <= 1");
  if (radii.size() < 2) throw ParamError("kinetic: need at least two radii");
  const std::size_t n = radii.size();
  std::vector<double> ext = radii;
  const double r_end = radii[n - 1] + (radii[n - 1] - radii[n - 2]);
  ext.push_back(r_end);
  RadialDensity shape(d, ext, std::vector<double>(n + 1, 0.0));
  const auto segs = shape.segments();
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n + 1, n + 1);

  if (s == 1.0) {
    const double area = sphere_area(d);
    for (const auto& seg : segs) {
      if (seg.left == seg.right) continue;
      const double h = seg.hi - seg.lo;
      const double vol = area * (std::pow(seg.hi, d) - std::pow(seg.lo, d)) / d;
      const double c = vol / (h * h);
      K(seg.left, seg.left) += c;
      K(seg.right, seg.right) += c;
      K(seg.left, seg.right) -= c;
      K(seg.right, seg.left) -= c;
    }
    K_ = K.topLeftCorner(n, n);
    return;
  }

  const double lambda = d + 2.0 * s;
  const RadialKernel G(d, lambda);
  // |f(r) - f(r')|^2 ~ |r - r'|^2 cancels two powers of the kernel singularity
  const double sigma = lambda - (d - 1) - 2.0;
  std::vector<PairNode> nodes;
  std::array<Contribution, 2> ha{}, hb{};
  std::array<std::size_t, 4> idx{};
  std::array<double, 4> diff{};
  for (std::size_t k = 0; k < segs.size(); ++k) {
    for (std::size_t l = k; l < segs.size(); ++l) {
      nodes.clear();
      segment_pair_nodes(segs[k], segs[l], sigma, nodes);
      const double sym = (k == l) ? 1.0 : 2.0;
      for (const auto& q : nodes) {
        const double g = sym * q.w * G(q.r, q.rp, q.delta);
        int count = 0;
        auto add = [&](std::size_t node, double v) {
          for (int i = 0; i < count; ++i) {
            if (idx[i] == node) {
              diff[i] += v;
              return;
            }
          }
          idx[count] = node;
          diff[count] = v;
          ++count;
        };
        const int na = hats(segs[k], q.r, ha);
        const int nb = hats(segs[l], q.rp, hb);
        for (int i = 0; i < na; ++i) add(ha[i].node, ha[i].value);
        for (int i = 0; i < nb; ++i) add(hb[i].node, -hb[i].value);
        for (int i = 0; i < count; ++i) {
          for (int j = 0; j < count; ++j) K(idx[i], idx[j]) += g * diff[i] * diff[j];
        }
      }
    }
  }
  // one point on the grid, the other beyond the ramp where the profile is zero
  const Rule& gl = gauss_legendre(10);
  for (const auto& seg : segs) {
    const double c = 0.5 * (seg.lo + seg.hi);
    const double h = 0.5 * (seg.hi - seg.lo);
    for (int q = 0; q < 10; ++q) {
      const double r = c + h * gl.x[q];
      const double w = 2.0 * h * gl.w[q] * tail_potential(G, r, r_end, s);
      const int na = hats(seg, r, ha);
      for (int i = 0; i < na; ++i) {
        for (int j = 0; j < na; ++j) K(ha[i].node, ha[j].node) += w * ha[i].value * ha[j].value;
      }
    }
  }
  K *= 0.5 * gagliardo_constant(d, s);
  K = 0.5 * (K + K.transpose()).eval();
  K_ = K.topLeftCorner(n, n);
}

double RadialKineticOperator::energy(std::span<const double> f) const {
  Eigen::Map<const Eigen::VectorXd> x(f.data(), static_cast<Eigen::Index>(f.size()));
  return x.dot(K_ * x);
}

std::vector<double> RadialKineticOperator::gradient(std::span<const double> f) const {
  Eigen::Map<const Eigen::VectorXd> x(f.data(), static_cast<Eigen::Index>(f.size()));
  Eigen::VectorXd g = 2.0 * (K_ * x);
  return {g.data(), g.data() + g.size()};
}

double fractional_kinetic(int d, const std::vector<double>& radii, std::span<const double> f, double s) {
  for (double x : f) {
    if (!std::isfinite(x)) throw ParamError("fractional_kinetic: non-finite value");
  }
  return RadialKineticOperator(d, radii, s).energy(f);
}

double fractional_kinetic_cartesian(int d, std::size_t n, double h, std::span<const double> f, double s,
                                    int padding) {
  if (padding < 2) throw ParamError("fractional_kinetic_cartesian: padding must be >= 2");
  if (d < 1 || d > 3) throw ParamError("fractional_kinetic_cartesian: need 1 <= d <= 3");
  if (!(s > 0.0) || s > 1.0) throw ParamError("fractional_kinetic_cartesian: need 0 < s <= 1");
  std::size_t count = 1;
  for (int a = 0; a < d; ++a) count *= n;
  if (f.size() != count) throw ParamError("fractional_kinetic_cartesian: size mismatch");
  for (double x : f) {
    if (!std::isfinite(x)) throw ParamError("fractional_kinetic_cartesian: non-finite value");
  }
  const std::size_t P = static_cast<std::size_t>(padding) * n;
  std::size_t total = 1;
  for (int a = 0; a < d; ++a) total *= P;
  const std::size_t half = P / 2 + 1;
  const std::size_t nc = total / P * half;
  std::vector<double> buf(total, 0.0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rem = idx, pidx = 0, stride = 1;
    for (int a = d - 1; a >= 0; --a) {
      pidx += (rem % n) * stride;
      rem /= n;
      stride *= P;
    }
    buf[pidx] = f[idx];
  }
  auto* out = fftw_alloc_complex(nc);
  std::array<int, 3> dims{static_cast<int>(P), static_cast<int>(P), static_cast<int>(P)};
  fftw_plan plan = fftw_plan_dft_r2c(d, dims.data(), buf.data(), out, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  const double dxi = 2.0 * std::numbers::pi / (double(P) * h);
  std::vector<double> terms(nc);
  for (std::size_t i = 0; i < nc; ++i) {
    std::size_t rem = i;
    double xi2 = 0.0;
    double mult = 1.0;
    for (int a = d - 1; a >= 0; --a) {
      const std::size_t len = (a == d - 1) ? half : P;
      const std::size_t k = rem % len;
      rem /= len;
      const double kk = (k <= P / 2) ? double(k) : double(k) - double(P);
      xi2 += kk * kk * dxi * dxi;
      if (a == d - 1 && k != 0 && k != P / 2) mult = 2.0;
    }
    const double amp2 = out[i][0] * out[i][0] + out[i][1] * out[i][1];
    terms[i] = mult * std::pow(xi2, s) * amp2;
  }
  fftw_free(out);
  return pairwise_sum(terms) * std::pow(h, 2.0 * d) / std::pow(double(P) * h, d);
}

}  // namespace hardylab
