#include "hardylab/riesz.hpp"

#include <fftw3.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>

#include "hardylab/quadrature.hpp"
#include "hardylab/radial_pairs.hpp"

namespace hardylab {

RieszKernel::RieszKernel(int d, double lambda) : d_(d), lambda_(lambda) {
  if (d < 1) throw ParamError("RieszKernel: dimension must be >= 1");
  if (!(lambda > 0.0) || !(lambda < d)) throw ParamError("RieszKernel: need 0 < lambda < d");
}

double RieszKernel::operator()(double r) const { return std::pow(r, -lambda_); }

RadialRieszOperator::RadialRieszOperator(int d, const std::vector<double>& radii, double lambda)
    : lambda_(lambda) {
  RieszKernel check(d, lambda);
  (void)check;
  const std::size_t n = radii.size();
  RadialDensity shape(d, radii, std::vector<double>(n, 0.0));
  const auto segs = shape.segments();
  const RadialKernel G(d, lambda);
  const double sigma = lambda - (d - 1);
  W_ = Eigen::MatrixXd::Zero(n, n);
  std::vector<PairNode> nodes;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    for (std::size_t l = k; l < segs.size(); ++l) {
      nodes.clear();
      segment_pair_nodes(segs[k], segs[l], sigma, nodes);
      double b00 = 0.0, b01 = 0.0, b10 = 0.0, b11 = 0.0;
      for (const auto& q : nodes) {
        const double g = q.w * G(q.r, q.rp, q.delta);
        const double a0 = segs[k].shape_left(q.r);
        const double a1 = segs[k].shape_right(q.r);
        const double c0 = segs[l].shape_left(q.rp);
        const double c1 = segs[l].shape_right(q.rp);
        b00 += g * a0 * c0;
        b01 += g * a0 * c1;
        b10 += g * a1 * c0;
        b11 += g * a1 * c1;
      }
      const std::size_t kl = segs[k].left, kr = segs[k].right;
      const std::size_t ll = segs[l].left, lr = segs[l].right;
      W_(kl, ll) += b00;
      W_(kl, lr) += b01;
      W_(kr, ll) += b10;
      W_(kr, lr) += b11;
      if (k != l) {
        W_(ll, kl) += b00;
        W_(lr, kl) += b01;
        W_(ll, kr) += b10;
        W_(lr, kr) += b11;
      }
    }
  }
  W_ = 0.5 * (W_ + W_.transpose()).eval();
}

double RadialRieszOperator::energy(std::span<const double> v) const {
  Eigen::Map<const Eigen::VectorXd> x(v.data(), static_cast<Eigen::Index>(v.size()));
  return 0.5 * x.dot(W_ * x);
}

std::vector<double> RadialRieszOperator::gradient(std::span<const double> v) const {
  Eigen::Map<const Eigen::VectorXd> x(v.data(), static_cast<Eigen::Index>(v.size()));
  Eigen::VectorXd g = W_ * x;
  return {g.data(), g.data() + g.size()};
}

double riesz_energy(const RadialDensity& rho, const RieszKernel& k) {
  if (rho.dim() != k.dim()) throw ParamError("riesz_energy: dimension mismatch");
  RadialRieszOperator op(rho.dim(), rho.radii(), k.lambda());
  return op.energy(rho.values());
}

// ---------------------------------------------------------------------------
// Cartesian layout

namespace {

// Weight prod(1 - |z_i|) times |o + z|^-lambda over one unit sub-cube
// z in prod [lo_i, lo_i + 1], by tensor Gauss-Legendre.
double subcube_regular(int d, double lambda, const std::array<int, 3>& o,
                       const std::array<int, 3>& lo, int m) {
  const Rule& g = gauss_legendre(m);
  std::array<int, 3> idx{0, 0, 0};
  double acc = 0.0;
  const int total = static_cast<int>(std::pow(m, d));
  for (int t = 0; t < total; ++t) {
    int rem = t;
    double w = 1.0;
    double r2 = 0.0;
    for (int a = 0; a < d; ++a) {
      idx[a] = rem % m;
      rem /= m;
      const double z = lo[a] + 0.5 * (g.x[idx[a]] + 1.0);
      w *= 0.5 * g.w[idx[a]] * (1.0 - std::fabs(z));
      const double y = o[a] + z;
      r2 += y * y;
    }
    acc += w * std::pow(r2, -0.5 * lambda);
  }
  return acc;
}

// Same integral when the singular point z = -o is a corner of the sub-cube.
// Each pyramid {zeta_j = max} is mapped to xi * (1, eta) with a graded xi.
double subcube_singular(int d, double lambda, const std::array<int, 3>& o,
                        const std::array<int, 3>& lo) {
  constexpr int m = 14;
  const Rule& g = gauss_legendre(m);
  const int q = std::clamp(static_cast<int>(std::ceil(3.0 / (d - lambda))), 1, 40);
  std::array<int, 3> dir{};
  for (int a = 0; a < d; ++a) dir[a] = (-o[a] == lo[a]) ? 1 : -1;
  double acc = 0.0;
  const int inner = static_cast<int>(std::pow(m, d - 1));
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < m; ++i) {
      const double v = 0.5 * (g.x[i] + 1.0);
      const double xi = std::pow(v, q);
      const double jx = 0.5 * g.w[i] * q * std::pow(v, q - 1) * std::pow(xi, d - 1);
      for (int t = 0; t < inner; ++t) {
        int rem = t;
        double w = jx;
        double n2 = 0.0;
        for (int a = 0; a < d; ++a) {
          double zeta;
          if (a == j) {
            zeta = xi;
            n2 += 1.0;
          } else {
            const int e = rem % m;
            rem /= m;
            const double eta = 0.5 * (g.x[e] + 1.0);
            w *= 0.5 * g.w[e];
            zeta = xi * eta;
            n2 += eta * eta;
          }
          const double z = -o[a] + dir[a] * zeta;
          w *= 1.0 - std::fabs(z);
        }
        acc += w * std::pow(xi * xi * n2, -0.5 * lambda);
      }
    }
  }
  return acc;
}

}  // namespace

double cell_pair_kernel(int d, double lambda, std::span<const int> offset) {
  if (d < 1 || d > 3 || static_cast<int>(offset.size()) != d) {
    throw ParamError("cell_pair_kernel: need 1 <= d <= 3 and d offsets");
  }
  std::array<int, 3> o{0, 0, 0};
  int linf = 0;
  for (int a = 0; a < d; ++a) {
    o[a] = std::abs(offset[a]);
    linf = std::max(linf, o[a]);
  }
  const int m = linf <= 4 ? 10 : 4;
  double acc = 0.0;
  for (int c = 0; c < (1 << d); ++c) {
    std::array<int, 3> lo{0, 0, 0};
    bool singular = true;
    for (int a = 0; a < d; ++a) {
      lo[a] = (c >> a) & 1 ? 0 : -1;
      // singular point -o[a] must be an endpoint of [lo, lo + 1]
      if (!(-o[a] == lo[a] || -o[a] == lo[a] + 1)) singular = false;
    }
    acc += singular ? subcube_singular(d, lambda, o, lo) : subcube_regular(d, lambda, o, lo, m);
  }
  return acc;
}

double riesz_energy(const CartesianDensity& rho, const RieszKernel& k) {
  const int d = rho.dim();
  if (d != k.dim()) throw ParamError("riesz_energy: dimension mismatch");
  const std::size_t n = rho.cells_per_axis();
  const std::size_t P = 2 * n;
  std::size_t total = 1;
  for (int a = 0; a < d; ++a) total *= P;
  const std::size_t nc = total / P * (P / 2 + 1);

  // kernel table depends only on the sorted absolute offset
  std::map<std::array<int, 3>, double> cache;
  std::vector<double> kern(total, 0.0);
  std::vector<double> dens(total, 0.0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    std::array<int, 3> off{0, 0, 0};
    std::array<int, 3> key{0, 0, 0};
    bool inside = true;
    for (int a = d - 1; a >= 0; --a) {
      const int i = static_cast<int>(rem % P);
      rem /= P;
      const int signed_i = i < static_cast<int>(n) ? i : i - static_cast<int>(P);
      if (signed_i == -static_cast<int>(n)) inside = false;
      off[a] = signed_i;
      key[a] = std::abs(signed_i);
    }
    if (!inside) continue;
    std::sort(key.begin(), key.begin() + d);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, cell_pair_kernel(d, k.lambda(), std::span<const int>(off.data(), d)))
               .first;
    }
    kern[idx] = it->second;
  }
  const auto& v = rho.values();
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    std::size_t rem = idx;
    std::size_t pidx = 0;
    std::size_t stride = 1;
    for (int a = d - 1; a >= 0; --a) {
      pidx += (rem % n) * stride;
      rem /= n;
      stride *= P;
    }
    dens[pidx] = v[idx];
  }
  std::array<int, 3> dims{static_cast<int>(P), static_cast<int>(P), static_cast<int>(P)};
  auto* kf = fftw_alloc_complex(nc);
  auto* df = fftw_alloc_complex(nc);
  fftw_plan pk = fftw_plan_dft_r2c(d, dims.data(), kern.data(), kf, FFTW_ESTIMATE);
  fftw_plan pd = fftw_plan_dft_r2c(d, dims.data(), dens.data(), df, FFTW_ESTIMATE);
  fftw_execute(pk);
  fftw_execute(pd);
  for (std::size_t i = 0; i < nc; ++i) {
    const double re = kf[i][0] * df[i][0] - kf[i][1] * df[i][1];
    const double im = kf[i][0] * df[i][1] + kf[i][1] * df[i][0];
    df[i][0] = re;
    df[i][1] = im;
  }
  std::vector<double> conv(total);
  fftw_plan pb = fftw_plan_dft_c2r(d, dims.data(), df, conv.data(), FFTW_ESTIMATE);
  fftw_execute(pb);
  fftw_destroy_plan(pk);
  fftw_destroy_plan(pd);
  fftw_destroy_plan(pb);
  fftw_free(kf);
  fftw_free(df);

  std::vector<double> terms(v.size());
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    std::size_t rem = idx;
    std::size_t pidx = 0;
    std::size_t stride = 1;
    for (int a = d - 1; a >= 0; --a) {
      pidx += (rem % n) * stride;
      rem /= n;
      stride *= P;
    }
    terms[idx] = v[idx] * conv[pidx] / double(total);
  }
  const double h = rho.spacing();
  return 0.5 * std::pow(h, 2.0 * d - k.lambda()) * pairwise_sum(terms);
}

double pair_interaction(const PointConfig& X, const RieszKernel& k) {
  if (X.dim() != k.dim()) throw ParamError("pair_interaction: dimension mismatch");
  return pair_sum(X, k.lambda());
}

std::vector<double> uniform_in_ball(int d, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  std::vector<double> x(d);
  double n2 = 0.0;
  for (auto& c : x) {
    c = nd(rng);
    n2 += c * c;
  }
  const double scale = std::pow(ud(rng), 1.0 / d) / std::sqrt(n2);
  for (auto& c : x) c *= scale;
  return x;
}

SublevelVolume sublevel_volume(const PointConfig& R, double threshold, std::size_t samples, Rng& rng) {
  if (!(threshold > 0.0)) throw ParamError("sublevel_volume: threshold must be positive");
  if (samples == 0) throw ParamError("sublevel_volume: need samples > 0");
  const int d = R.dim();
  const std::size_t K = R.size();
  const double bound = unit_ball_volume(d) * double(K) * std::pow(threshold, d);
  std::uniform_int_distribution<std::size_t> pick(0, K - 1);
  std::vector<double> y(d);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t k = pick(rng);
    const auto u = uniform_in_ball(d, rng);
    for (int a = 0; a < d; ++a) y[a] = R[k][a] + threshold * u[a];
    bool first = true;
    for (std::size_t j = 0; j < k && first; ++j) {
      if (distance(R[j], y) < threshold) first = false;
    }
    if (first) ++hits;
  }
  const double p = double(hits) / double(samples);
  return {bound * p, bound, bound * std::sqrt(p * (1.0 - p) / double(samples))};
}

}  // namespace hardylab
