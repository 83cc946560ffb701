#include <fftw3.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "hardylab/manybody.hpp"
#include "hardylab/quadrature.hpp"

namespace hardylab {

namespace {

constexpr double kPi = std::numbers::pi;

// int_a^b rho^k d rho
double power_integral(double k, double a, double b) {
  if (b <= a) return 0.0;
  if (std::abs(k + 1.0) < 1e-14) return std::log(b / a);
  return (std::pow(b, k + 1.0) - std::pow(a, k + 1.0)) / (k + 1.0);
}

// int_eps^{rho_max} rho^{d-1-lambda} prod_i (1 - rho w_i) d rho along direction w >= 0
double ray_integral(int d, double lambda, double eps, std::span<const double> w) {
  double wmax = 0.0;
  for (double v : w) wmax = std::max(wmax, v);
  const double rho_max = 1.0 / wmax;
  // coefficients of prod (1 - rho w_i) in rho
  std::array<double, 4> c{1.0, 0.0, 0.0, 0.0};
  for (int i = 0; i < d; ++i) {
    for (int k = i + 1; k >= 1; --k) c[k] -= w[i] * c[k - 1];
  }
  double total = 0.0;
  for (int k = 0; k <= d; ++k) total += c[k] * power_integral(k + d - 1 - lambda, eps, rho_max);
  return total;
}

QuadOptions angular_opts() {
  QuadOptions o;
  o.abs_tol = 1e-14;
  o.rel_tol = 1e-11;
  o.max_intervals = 4000;
  return o;
}

}  // namespace

IEpsilon i_epsilon(int d, double lambda, double eps) {
  if (d < 1 || d > 3) throw ParamError("i_epsilon: need 1 <= d <= 3");
  if (!(lambda > 0.0)) throw ParamError("i_epsilon: need lambda > 0");
  if (!(eps > 0.0)) throw ParamError("i_epsilon: need eps > 0");
  if (eps >= std::sqrt(double(d))) return {0.0, true};
  const QuadOptions o = angular_opts();
  if (d == 1) {
    const std::array<double, 1> w{1.0};
    return {2.0 * ray_integral(1, lambda, eps, w), false};
  }
  if (d == 2) {
    auto f = [&](double t) {
      const std::array<double, 2> w{std::cos(t), std::sin(t)};
      return ray_integral(2, lambda, eps, w);
    };
    std::vector<double> bp{kPi / 4};
    if (eps > 1.0) {
      const double t0 = std::acos(1.0 / eps);
      bp = {t0, kPi / 4, kPi / 2 - t0};
    }
    return {4.0 * integrate(f, 0.0, kPi / 2, o, bp), false};
  }
  auto outer = [&](double phi) {
    const double cp = std::cos(phi), sp = std::sin(phi);
    const double m = std::max(cp, sp);
    auto inner = [&](double th) {
      const double st = std::sin(th);
      const std::array<double, 3> w{st * cp, st * sp, std::cos(th)};
      return st * ray_integral(3, lambda, eps, w);
    };
    std::vector<double> bp{std::atan(1.0 / m)};
    QuadOptions oi = o;
    oi.rel_tol = 1e-12;
    return integrate(inner, 0.0, kPi / 2, oi, bp);
  };
  const std::array<double, 1> bp{kPi / 4};
  return {8.0 * integrate(outer, 0.0, kPi / 2, o, bp), false};
}

IEpsilon i_epsilon(double eps) { return i_epsilon(2, 2.0, eps); }

namespace {

// e^{i unit n r_a} tables for n in [-nmax, nmax]
struct PhaseTable {
  int nmax;
  std::vector<std::complex<double>> v;
  void fill(double unit_r) {
    v.resize(2 * nmax + 1);
    v[nmax] = 1.0;
    for (int n = 1; n <= nmax; ++n) {
      v[nmax + n] = std::polar(1.0, unit_r * n);
      v[nmax - n] = std::conj(v[nmax + n]);
    }
  }
};

class MomentumSum {
 public:
  explicit MomentumSum(const SlaterState& st) : st_(st), d_(st.dim()) {
    nmax_ = 0;
    for (std::size_t k = 0; k < st.N(); ++k) {
      for (int v : st.momentum_index(k)) nmax_ = std::max(nmax_, std::abs(v));
    }
    tables_.assign(d_, PhaseTable{nmax_, {}});
  }
  double abs2(std::span<const double> r) {
    const double unit = 2.0 * kPi / st_.L();
    for (int a = 0; a < d_; ++a) tables_[a].fill(unit * r[a]);
    std::complex<double> s = 0.0;
    for (std::size_t k = 0; k < st_.N(); ++k) {
      const auto n = st_.momentum_index(k);
      std::complex<double> t = tables_[0].v[n[0] + nmax_];
      for (int a = 1; a < d_; ++a) t *= tables_[a].v[n[a] + nmax_];
      s += t;
    }
    return std::norm(s);
  }

 private:
  const SlaterState& st_;
  int d_;
  int nmax_;
  std::vector<PhaseTable> tables_;
};

// limit of (N^2 - |S(r)|^2) / |r|^2 averaged over directions
double origin_limit(const SlaterState& st) {
  const int d = st.dim();
  const double unit = 2.0 * kPi / st.L();
  double sum2 = 0.0;
  std::vector<double> mean(d, 0.0);
  for (std::size_t k = 0; k < st.N(); ++k) {
    const auto n = st.momentum_index(k);
    for (int a = 0; a < d; ++a) {
      const double p = unit * n[a];
      sum2 += p * p;
      mean[a] += p;
    }
  }
  double m2 = 0.0;
  for (double v : mean) m2 += v * v;
  return (double(st.N()) * sum2 - m2) / d;
}

// int F(t) F(t - r) dt
double profile_autocorrelation(const SlaterState& st, double r) {
  const double L = st.L(), ell = st.ell();
  const auto& z = st.mollifier();
  const double a = 0.5 * (L + ell);
  const double lo = std::max(-a, r - a), hi = std::min(a, r + a);
  if (hi <= lo) return 0.0;
  std::vector<double> bp;
  for (double c : {-0.5 * (L - ell), 0.5 * (L - ell), r - 0.5 * (L - ell), r + 0.5 * (L - ell), r - a, r + a}) {
    if (c > lo && c < hi) bp.push_back(c);
  }
  std::sort(bp.begin(), bp.end());
  QuadOptions o;
  o.abs_tol = 1e-14 * L;
  o.rel_tol = 1e-12;
  return integrate([&](double t) { return z.profile(t, L) * z.profile(t - r, L); }, lo, hi, o, bp);
}

}  // namespace

SlaterInteraction slater_interaction(const SlaterState& st, const Params& p, const InteractionOptions& opts) {
  const int d = st.dim();
  if (p.d() != d) throw ParamError("slater_interaction: dimension mismatch");
  if (!(opts.cutoff_C > 0.0)) throw ParamError("slater_interaction: cutoff C must be positive");
  if (!(opts.points_per_wavelength >= 2.0)) throw ParamError("slater_interaction: need >= 2 points per wavelength");
  const double s = p.s();
  const double L = st.L(), ell = st.ell(), mu = st.fermi_mu();
  const double N = double(st.N());
  const double Li = L - ell;
  const double cut = opts.cutoff_C / std::sqrt(mu);
  const double scale = std::pow(L, -2.0 * d);

  SlaterInteraction out{};
  out.cutoff_C = opts.cutoff_C;
  const IEpsilon ie = i_epsilon(d, 2.0 * s, cut / Li);
  out.direct_omega = N * N * scale * std::pow(Li, 2.0 * d - 2.0 * s) * ie.value;
  if (st.N() == 1) {
    // |S| = N everywhere: the pair density vanishes identically
    out.exchange_omega = out.direct_omega;
    return out;
  }

  // S(r) on r = k h via an FFT of the momentum indicator; S has period L.
  const double kmax = std::sqrt(mu) * L / kPi;
  std::size_t G = std::max<std::size_t>(16, std::size_t(std::ceil(opts.points_per_wavelength * kmax)));
  G += G % 2;
  const double h = L / double(G);
  std::size_t total = 1;
  for (int a = 0; a < d; ++a) total *= G;
  auto* S = fftw_alloc_complex(total);
  std::fill_n(&S[0][0], 2 * total, 0.0);
  for (std::size_t k = 0; k < st.N(); ++k) {
    std::size_t idx = 0;
    for (int v : st.momentum_index(k)) idx = idx * G + std::size_t((v % long(G) + long(G)) % long(G));
    S[idx][0] += 1.0;
  }
  std::vector<int> dims(d, int(G));
  fftw_plan plan = fftw_plan_dft(d, dims.data(), S, S, FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  std::vector<double> S2(total);
  double min_pair = N * N;
  for (std::size_t i = 0; i < total; ++i) {
    S2[i] = S[i][0] * S[i][0] + S[i][1] * S[i][1];
    min_pair = std::min(min_pair, N * N - S2[i]);
  }
  fftw_free(S);
  out.min_pair_density = scale * min_pair;

  // per-axis weights on k = -K..K
  const long K = long(std::ceil((L + ell) / h)) + 1;
  std::vector<double> wa(2 * K + 1), wo(2 * K + 1);
  for (long k = 0; k <= K; ++k) {
    const double r = double(k) * h;
    const double a = profile_autocorrelation(st, r);
    const double o = std::max(Li - r, 0.0);
    wa[K + k] = wa[K - k] = a;
    wo[K + k] = wo[K - k] = o;
  }
  const double at_origin = (s == 1.0) ? origin_limit(st) : 0.0;
  const double cell = std::pow(h, d);
  std::vector<double> acc_a, acc_o;
  acc_a.reserve(2 * K + 1);
  acc_o.reserve(2 * K + 1);
  std::vector<double> row_a, row_o;
  // iterate over all but the last axis, summing rows along the last axis
  std::vector<long> k(d, -K);
  while (true) {
    double wpa = 1.0, wpo = 1.0, r2_head = 0.0;
    std::size_t base = 0;
    for (int a = 0; a + 1 < d; ++a) {
      wpa *= wa[k[a] + K];
      wpo *= wo[k[a] + K];
      r2_head += double(k[a]) * double(k[a]);
      base = base * G + std::size_t(((k[a] % long(G)) + long(G)) % long(G));
    }
    if (wpa != 0.0 || wpo != 0.0) {
      double sa = 0.0, so = 0.0;
      for (long j = -K; j <= K; ++j) {
        const double wl_a = wa[j + K], wl_o = wo[j + K];
        if (wl_a == 0.0 && wl_o == 0.0) continue;
        const double r2 = (r2_head + double(j) * double(j)) * h * h;
        double f;
        if (r2 == 0.0) {
          f = at_origin;
        } else {
          const std::size_t idx = base * G + std::size_t(((j % long(G)) + long(G)) % long(G));
          f = (N * N - S2[idx]) * std::pow(r2, -s);
        }
        sa += f * wl_a;
        so += f * wl_o;
      }
      acc_a.push_back(sa * wpa);
      acc_o.push_back(so * wpo);
    }
    int a = d - 2;
    while (a >= 0 && k[a] == K) k[a--] = -K;
    if (a < 0) break;
    ++k[a];
  }
  const double grid_a = pairwise_sum(acc_a) * cell;
  const double grid_o = pairwise_sum(acc_o) * cell;

  // the part of the Omega-weighted integral with |r| < cut, in polar form
  MomentumSum ms(st);
  auto ray = [&](std::span<const double> w) {
    double wmax = 0.0;
    for (double v : w) wmax = std::max(wmax, std::abs(v));
    const double top = std::min(cut, Li / wmax);
    const Rule& gl = gauss_legendre(48);
    std::vector<double> r(d);
    double acc = 0.0;
    for (std::size_t q = 0; q < gl.x.size(); ++q) {
      const double rho = 0.5 * top * (gl.x[q] + 1.0);
      double weight = 1.0;
      for (int a = 0; a < d; ++a) {
        r[a] = rho * w[a];
        weight *= std::max(Li - std::abs(r[a]), 0.0);
      }
      const double f = (N * N - ms.abs2(r)) * std::pow(rho, d - 1.0 - 2.0 * s);
      acc += 0.5 * top * gl.w[q] * f * weight;
    }
    return acc;
  };
  double disk = 0.0;
  if (d == 1) {
    const std::array<double, 1> plus{1.0}, minus{-1.0};
    disk = ray(plus) + ray(minus);
  } else if (d == 2) {
    const int na = 256;
    for (int j = 0; j < na; ++j) {
      const double t = 2.0 * kPi * j / na;
      const std::array<double, 2> w{std::cos(t), std::sin(t)};
      disk += ray(w) * 2.0 * kPi / na;
    }
  } else {
    const int nphi = 64;
    const Rule& gt = gauss_legendre(16);
    for (int hemi = 0; hemi < 2; ++hemi) {
      for (std::size_t q = 0; q < gt.x.size(); ++q) {
        const double ct = (hemi == 0 ? 0.5 : -0.5) * (gt.x[q] + 1.0);
        const double stt = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        for (int j = 0; j < nphi; ++j) {
          const double phi = 2.0 * kPi * j / nphi;
          const std::array<double, 3> w{stt * std::cos(phi), stt * std::sin(phi), ct};
          disk += ray(w) * 0.5 * gt.w[q] * 2.0 * kPi / nphi;
        }
      }
    }
  }
  const double omega_part = std::max(grid_o - disk, 0.0);
  out.estimate = 0.5 * scale * grid_a;
  out.lower_bound = 0.5 * scale * omega_part;
  out.exchange_omega = out.direct_omega - scale * omega_part;
  return out;
}

HardyQuotient hardy_quotient(const SlaterState& st, const Params& p, const InteractionOptions& opts) {
  if (st.N() < 2) throw ParamError("hardy_quotient: N = 1 has no pair interaction");
  HardyQuotient h{};
  h.kinetic = slater_kinetic(st, p);
  h.interaction = slater_interaction(st, p, opts);
  if (!(h.interaction.lower_bound > 0.0)) {
    throw NumericalError("hardy_quotient: interaction lower bound is not positive (box too small for the cutoff)");
  }
  h.quotient = h.kinetic / h.interaction.lower_bound;
  return h;
}

ExchangeBoundReport exchange_lattice_bound(const SlaterState& st, double C, int radii, int angles) {
  if (st.dim() != 2) throw ParamError("exchange_lattice_bound: need d = 2");
  if (!(C > 0.0) || radii < 2 || angles < 1) throw ParamError("exchange_lattice_bound: bad sweep");
  const double sq = std::sqrt(st.fermi_mu());
  const double r0 = C / sq, r1 = 0.5 * st.L();
  if (r0 >= r1) throw ParamError("exchange_lattice_bound: C / sqrt(mu) exceeds L/2");
  MomentumSum ms(st);
  ExchangeBoundReport rep{0.0, {0.0, 0.0}, 0};
  const double Ld = st.L() * st.L();
  for (int i = 0; i < radii; ++i) {
    const double r = r0 * std::pow(r1 / r0, double(i) / (radii - 1));
    for (int j = 0; j < angles; ++j) {
      const double t = kPi * j / angles;
      const std::array<double, 2> v{r * std::cos(t), r * std::sin(t)};
      const double val = std::sqrt(ms.abs2(v)) / Ld * r / sq;
      ++rep.evaluations;
      if (val > rep.sup) {
        rep.sup = val;
        rep.argmax = {v[0], v[1]};
      }
    }
  }
  return rep;
}

}  // namespace hardylab
