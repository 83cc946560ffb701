#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hardylab/manybody.hpp"
#include "hardylab/quadrature.hpp"

namespace hardylab {

namespace {

constexpr double kPi = std::numbers::pi;

QuadOptions tight() {
  QuadOptions o;
  o.abs_tol = 1e-15;
  o.rel_tol = 1e-13;
  o.max_intervals = 8000;
  return o;
}

// Lattice points of Z^d with |n|^2 <= radius2, sorted by (|n|^2, n_1, ..., n_d).
std::vector<std::vector<int>> lattice_ball(int d, long radius2) {
  const int m = static_cast<int>(std::floor(std::sqrt(double(radius2)))) + 1;
  std::vector<std::vector<int>> pts;
  std::vector<int> n(d, -m);
  while (true) {
    long r2 = 0;
    for (int v : n) r2 += long(v) * v;
    if (r2 <= radius2) pts.push_back(n);
    int a = d - 1;
    while (a >= 0 && n[a] == m) n[a--] = -m;
    if (a < 0) break;
    ++n[a];
  }
  std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
    long ax = 0, ay = 0;
    for (int v : x) ax += long(v) * v;
    for (int v : y) ay += long(v) * v;
    if (ax != ay) return ax < ay;
    return x < y;
  });
  return pts;
}

long norm2(const std::vector<int>& n) {
  long r = 0;
  for (int v : n) r += long(v) * v;
  return r;
}

void check_geometry(int d, double L, double ell_ratio) {
  if (d < 1 || d > 3) throw ParamError("slater: need 1 <= d <= 3");
  if (!(L > 0.0) || !std::isfinite(L)) throw ParamError("slater: L must be positive");
  if (!(ell_ratio > 0.0) || ell_ratio > 1.0 / 16.0) throw ParamError("slater: need 0 < ell <= L/16");
}

}  // namespace

double Mollifier::zeta(double t) const {
  if (std::abs(t) >= 0.5 * ell) return 0.0;
  const double c = std::cos(kPi * t / ell);
  return mass * 2.0 / ell * c * c;
}

double Mollifier::cdf(double t) const {
  if (t <= -0.5 * ell) return 0.0;
  if (t >= 0.5 * ell) return mass;
  return mass * (0.5 + t / ell + std::sin(2.0 * kPi * t / ell) / (2.0 * kPi));
}

double Mollifier::profile(double t, double L) const { return cdf(t + 0.5 * L) - cdf(t - 0.5 * L); }

double Mollifier::profile_derivative(double t, double L) const {
  return zeta(t + 0.5 * L) - zeta(t - 0.5 * L);
}

SlaterState::SlaterState(int d, double L, double mu, std::vector<int> n, Mollifier z)
    : d_(d), L_(L), mu_(mu), n_(std::move(n)), zeta_(z) {}

SlaterState SlaterState::build(int d, double L, double mu, std::optional<std::size_t> count, double ell_ratio) {
  check_geometry(d, L, ell_ratio);
  if (!(mu > 0.0) || !std::isfinite(mu)) throw ParamError("build_momentum_set: mu must be positive");
  const double unit = 2.0 * kPi / L;
  const double target = mu / (unit * unit);  // |n|^2 bound
  const long r2 = static_cast<long>(std::floor(target * (1.0 + 1e-12)));
  auto pts = lattice_ball(d, r2);
  auto on_shell = [&](long k) { return std::abs(double(k) - target) <= 1e-12 * std::max(1.0, target); };
  std::size_t strict = 0;
  while (strict < pts.size() && !on_shell(norm2(pts[strict]))) ++strict;
  std::size_t take = pts.size();
  if (count) {
    if (*count == 0) throw ParamError("build_momentum_set: N must be >= 1");
    if (*count < strict) {
      throw ParamError("build_momentum_set: requested N is below the number of momenta with |p|^2 < mu");
    }
    if (*count > pts.size()) {
      throw ParamError("build_momentum_set: requested N exceeds the momenta with |p|^2 <= mu");
    }
    take = *count;
  }
  std::vector<int> flat;
  for (std::size_t k = 0; k < take; ++k) flat.insert(flat.end(), pts[k].begin(), pts[k].end());
  return SlaterState(d, L, mu, std::move(flat), Mollifier{ell_ratio * L, 1.0});
}

SlaterState SlaterState::with_particle_count(int d, double L, std::size_t N, double ell_ratio) {
  check_geometry(d, L, ell_ratio);
  if (N < 1) throw ParamError("slater: N must be >= 1");
  long r2 = 1;
  std::vector<std::vector<int>> pts;
  while (true) {
    pts = lattice_ball(d, r2);
    if (pts.size() >= N) break;
    r2 *= 2;
  }
  std::vector<int> flat;
  for (std::size_t k = 0; k < N; ++k) flat.insert(flat.end(), pts[k].begin(), pts[k].end());
  const double unit = 2.0 * kPi / L;
  double mu = unit * unit * double(norm2(pts[N - 1]));
  if (mu == 0.0) mu = 0.5 * unit * unit;  // only the origin: any 0 < mu < unit^2
  return SlaterState(d, L, mu, std::move(flat), Mollifier{ell_ratio * L, 1.0});
}

std::vector<double> SlaterState::momentum(std::size_t k) const {
  std::vector<double> p(d_);
  for (int a = 0; a < d_; ++a) p[a] = 2.0 * kPi / L_ * n_[k * d_ + a];
  return p;
}

SlaterState SlaterState::with_mollifier_mass(double m) const {
  SlaterState s = *this;
  s.zeta_.mass = m;
  return s;
}

double SlaterState::box_profile(std::span<const double> x) const {
  double f = 1.0;
  for (int a = 0; a < d_; ++a) f *= zeta_.profile(x[a], L_);
  return f;
}

double SlaterState::density(std::span<const double> x) const {
  return double(N()) * box_profile(x) / std::pow(L_, d_);
}

std::complex<double> SlaterState::momentum_sum(std::span<const double> r) const {
  const double unit = 2.0 * kPi / L_;
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < N(); ++k) {
    double phase = 0.0;
    for (int a = 0; a < d_; ++a) phase += n_[k * d_ + a] * r[a];
    phase *= unit;
    re += std::cos(phase);
    im += std::sin(phase);
  }
  return {re, im};
}

std::complex<double> SlaterState::density_matrix(std::span<const double> x, std::span<const double> xp) const {
  std::vector<double> r(d_);
  for (int a = 0; a < d_; ++a) r[a] = x[a] - xp[a];
  const double amp = std::sqrt(box_profile(x) * box_profile(xp)) / std::pow(L_, d_);
  return amp * momentum_sum(r);
}

void SlaterState::orbitals(std::span<const double> x, std::vector<std::complex<double>>& out) const {
  out.resize(N());
  const double amp = std::sqrt(box_profile(x) / std::pow(L_, d_));
  const double unit = 2.0 * kPi / L_;
  for (std::size_t k = 0; k < N(); ++k) {
    double phase = 0.0;
    for (int a = 0; a < d_; ++a) phase += n_[k * d_ + a] * x[a];
    out[k] = std::polar(amp, unit * phase);
  }
}

double SlaterState::profile_power_integral(double p) const {
  const double lo = 0.5 * (L_ - ell()), hi = 0.5 * (L_ + ell());
  auto f = [&](double t) { return std::pow(std::max(zeta_.profile(t, L_), 0.0), p); };
  // symmetric: interior plateau plus twice one edge
  const double edge = integrate(f, lo, hi, tight());
  const double interior = 2.0 * lo * std::pow(zeta_.profile(0.0, L_), p);
  return std::pow(interior + 2.0 * edge, d_);
}

namespace {

// L^{-1} int F(t) e^{i 2 pi m t / L} dt
std::complex<double> axis_overlap(const SlaterState& st, int m) {
  const double L = st.L();
  const double ell = st.ell();
  const auto& z = st.mollifier();
  const double w = 2.0 * kPi * m / L;
  const double a = 0.5 * (L + ell);
  std::vector<double> bp{-0.5 * (L - ell), 0.5 * (L - ell)};
  // split the oscillation into about one period per panel
  const int panels = std::max(1, std::abs(m));
  std::vector<double> all = bp;
  for (int k = 1; k < panels; ++k) all.push_back(-a + 2.0 * a * k / panels);
  std::sort(all.begin(), all.end());
  QuadOptions o = tight();
  const double re = integrate([&](double t) { return z.profile(t, L) * std::cos(w * t); }, -a, a, o, all);
  const double im = integrate([&](double t) { return z.profile(t, L) * std::sin(w * t); }, -a, a, o, all);
  return {re / L, im / L};
}

}  // namespace

std::complex<double> orbital_overlap(const SlaterState& st, std::size_t k, std::size_t kp) {
  if (k >= st.N() || kp >= st.N()) throw ParamError("orbital_overlap: momentum index out of range");
  std::complex<double> v = 1.0;
  const auto n = st.momentum_index(k);
  const auto np = st.momentum_index(kp);
  for (int a = 0; a < st.dim(); ++a) v *= axis_overlap(st, np[a] - n[a]);
  return v;
}

double gram_deviation(const SlaterState& st) {
  const int d = st.dim();
  int span = 0;
  for (std::size_t k = 0; k < st.N(); ++k) {
    for (int v : st.momentum_index(k)) span = std::max(span, std::abs(v));
  }
  const int M = 2 * span;
  std::vector<std::complex<double>> table(2 * M + 1);
  for (int m = -M; m <= M; ++m) table[m + M] = axis_overlap(st, m);
  double worst = 0.0;
  for (std::size_t k = 0; k < st.N(); ++k) {
    const auto n = st.momentum_index(k);
    for (std::size_t l = 0; l < st.N(); ++l) {
      const auto np = st.momentum_index(l);
      std::complex<double> v = 1.0;
      for (int a = 0; a < d; ++a) v *= table[np[a] - n[a] + M];
      worst = std::max(worst, std::abs(v - (k == l ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double slater_mass(const SlaterState& st) {
  return double(st.N()) * st.profile_power_integral(1.0) / std::pow(st.L(), st.dim());
}

namespace {

// int ((sqrt F)')^2 dt over R
double edge_gradient_energy(const SlaterState& st) {
  const double L = st.L(), ell = st.ell();
  const auto& z = st.mollifier();
  auto f = [&](double t) {
    const double F = z.profile(t, L);
    if (F <= 0.0) return 0.0;
    const double dF = z.profile_derivative(t, L);
    return dF * dF / (4.0 * F);
  };
  return 2.0 * integrate(f, 0.5 * (L - ell), 0.5 * (L + ell), tight());
}

std::size_t next_fft_size(std::size_t n) {
  std::size_t best = SIZE_MAX;
  for (std::size_t a = 1; a < 2 * n + 2; a *= 2)
    for (std::size_t b = a; b < 2 * n + 2; b *= 3)
      for (std::size_t c = b; c < 2 * n + 2; c *= 5)
        if (c >= n) best = std::min(best, c);
  return best;
}

}  // namespace

double slater_kinetic(const SlaterState& st, const Params& p) {
  if (p.d() != st.dim()) throw ParamError("slater_kinetic: dimension mismatch");
  if (p.s() != 1.0) return slater_kinetic_spectral(st, p.s());
  const double unit = 2.0 * kPi / st.L();
  std::vector<double> terms(st.N());
  for (std::size_t k = 0; k < st.N(); ++k) {
    double n2 = 0.0;
    for (int v : st.momentum_index(k)) n2 += double(v) * v;
    terms[k] = unit * unit * n2;
  }
  const double edges = double(st.N()) * st.dim() * edge_gradient_energy(st) / st.L();
  return pairwise_sum(terms) + edges;
}

double slater_kinetic_spectral(const SlaterState& st, double s) {
  if (!(s > 0.0) || s > 1.0) throw ParamError("slater_kinetic: need 0 < s <= 1");
  const int d = st.dim();
  const double L = st.L();
  const auto& z = st.mollifier();
  // |g^_1|^2 on the frequency lattice (pi / L) Z from samples of sqrt F on [-L, L)
  const std::size_t J = (d == 3) ? 64 : 256;
  const std::size_t Ms = 8 * J;
  const double B = 2.0 * L;
  std::vector<double> samples(Ms);
  for (std::size_t k = 0; k < Ms; ++k) {
    const double t = -L + B * double(k) / double(Ms);
    samples[k] = std::sqrt(std::max(z.profile(t, L), 0.0));
  }
  auto* spec = fftw_alloc_complex(Ms / 2 + 1);
  fftw_plan plan = fftw_plan_dft_r2c_1d(int(Ms), samples.data(), spec, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  const int half = int(J / 2);
  std::vector<double> w1(2 * half + 1);
  for (int j = -half; j <= half; ++j) {
    const auto& c = spec[std::abs(j)];
    const double amp = (B / double(Ms)) * (B / double(Ms)) * (c[0] * c[0] + c[1] * c[1]);
    w1[j + half] = amp / B / L;
  }
  fftw_free(spec);

  int nmax = 0;
  for (std::size_t k = 0; k < st.N(); ++k) {
    for (int v : st.momentum_index(k)) nmax = std::max(nmax, std::abs(v));
  }
  const int reach = half + 2 * nmax;
  const std::size_t G = next_fft_size(std::size_t(2 * reach + 1));
  std::size_t total = 1;
  for (int a = 0; a < d; ++a) total *= G;
  auto wrap = [&](int v) { return std::size_t((v % int(G) + int(G)) % int(G)); };
  auto* wa = fftw_alloc_complex(total);
  auto* ia = fftw_alloc_complex(total);
  std::fill_n(&wa[0][0], 2 * total, 0.0);
  std::fill_n(&ia[0][0], 2 * total, 0.0);
  std::vector<int> j(d, -half);
  while (true) {
    double v = 1.0;
    std::size_t idx = 0;
    for (int a = 0; a < d; ++a) {
      v *= w1[j[a] + half];
      idx = idx * G + wrap(j[a]);
    }
    wa[idx][0] = v;
    int a = d - 1;
    while (a >= 0 && j[a] == half) j[a--] = -half;
    if (a < 0) break;
    ++j[a];
  }
  for (std::size_t k = 0; k < st.N(); ++k) {
    std::size_t idx = 0;
    for (int v : st.momentum_index(k)) idx = idx * G + wrap(2 * v);
    ia[idx][0] += 1.0;
  }
  std::vector<int> dims(d, int(G));
  fftw_plan pw = fftw_plan_dft(d, dims.data(), wa, wa, FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_plan pi = fftw_plan_dft(d, dims.data(), ia, ia, FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_execute(pw);
  fftw_execute(pi);
  for (std::size_t i = 0; i < total; ++i) {
    const double re = wa[i][0] * ia[i][0] - wa[i][1] * ia[i][1];
    const double im = wa[i][0] * ia[i][1] + wa[i][1] * ia[i][0];
    wa[i][0] = re;
    wa[i][1] = im;
  }
  fftw_plan back = fftw_plan_dft(d, dims.data(), wa, wa, FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_execute(back);
  fftw_destroy_plan(pw);
  fftw_destroy_plan(pi);
  fftw_destroy_plan(back);
  const double step = kPi / L;
  std::vector<double> terms(total);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t rem = i;
    double k2 = 0.0;
    for (int a = 0; a < d; ++a) {
      const std::size_t c = rem % G;
      rem /= G;
      const double kk = (c <= G / 2) ? double(c) : double(c) - double(G);
      k2 += kk * kk;
    }
    terms[i] = std::pow(step * step * k2, s) * wa[i][0] / double(total);
  }
  fftw_free(wa);
  fftw_free(ia);
  return pairwise_sum(terms);
}

}  // namespace hardylab
