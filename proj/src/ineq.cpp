#include "hardylab/ineq.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cmath>
#include <numbers>
#include <random>

#include "hardylab/density.hpp"
#include "hardylab/quadrature.hpp"
#include "hardylab/special.hpp"

namespace hardylab {

namespace {

constexpr double kPi = std::numbers::pi;

void random_direction(int d, Rng& rng, std::vector<double>& u) {
  std::normal_distribution<double> g(0.0, 1.0);
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (int a = 0; a < d; ++a) {
      u[a] = g(rng);
      n2 += u[a] * u[a];
    }
  } while (n2 == 0.0);
  const double inv = 1.0 / std::sqrt(n2);
  for (int a = 0; a < d; ++a) u[a] *= inv;
}

struct MeanVar {
  double mean;
  double std_error;
};

MeanVar mean_and_error(const std::vector<double>& v) {
  const double n = double(v.size());
  const double m = pairwise_sum(v) / n;
  std::vector<double> dev(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) dev[i] = (v[i] - m) * (v[i] - m);
  const double var = v.size() > 1 ? pairwise_sum(dev) / (n - 1.0) : 0.0;
  return {m, std::sqrt(var / n)};
}

}  // namespace

double SweepReport::stability() const {
  if (std::isnan(constant_doubled) || std::isnan(empirical_constant) || empirical_constant == 0.0) return kNaN;
  return std::abs(constant_doubled / empirical_constant - 1.0);
}

double electrostatic_constant(int d, double lambda) {
  const RieszKernel k(d, lambda);
  return fdll_constant(k) * unit_ball_volume(d) * std::pow(2.0, lambda) / lambda;
}

double nearest_potential_integral(const GaussianMixture& rho, const PointConfig& R, double lambda,
                                  std::size_t samples, Rng& rng) {
  const int d = rho.dim();
  if (R.dim() != d) throw ParamError("nearest_potential_integral: dimension mismatch");
  if (samples == 0) throw ParamError("nearest_potential_integral: need samples > 0");
  const std::size_t K = R.size();
  const double mass = rho.mass();
  // h_k(y) = |y - R_k|^-lambda (d - lambda) / |S^{d-1}| on the unit ball
  const double hnorm = (d - lambda) / sphere_area(d);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, K - 1);
  std::vector<double> y(d), dir(d), vals(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    if (u(rng) < 0.5) {
      rho.sample(rng, y);
    } else {
      const auto c = R[pick(rng)];
      random_direction(d, rng, dir);
      const double r = std::pow(u(rng), 1.0 / (d - lambda));
      for (int a = 0; a < d; ++a) y[a] = c[a] + r * dir[a];
    }
    double q = 0.5 * rho(y) / mass;
    double h = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      const double r = distance(y, R[k]);
      if (r < 1.0) {
        if (r == 0.0) throw NumericalError("nearest_potential_integral: sample hit a point of R");
        h += hnorm * std::pow(r, -lambda);
      }
    }
    q += 0.5 * h / double(K);
    const double delta = nearest_distance(R, y);
    if (delta == 0.0) throw NumericalError("nearest_potential_integral: sample hit a point of R");
    vals[i] = rho(y) * std::pow(delta, -lambda) / q;
  }
  return pairwise_sum(vals) / double(samples);
}

Ratio electrostatic_gap(const GaussianMixture& rho, const PointConfig& R, double Z, const RieszKernel& k,
                        std::size_t samples, Rng& rng) {
  if (!(Z >= 0.0)) throw ParamError("electrostatic_gap: Z must be nonnegative");
  R.require_distinct();
  const double l = k.lambda();
  double attraction = 0.0;
  for (std::size_t i = 0; i < R.size(); ++i) attraction += rho.potential(R[i], l);
  const double lhs = Z * attraction - Z * Z * pair_sum(R, l) - rho.riesz_energy(l);
  const double rhs = Z == 0.0 ? 0.0 : Z * nearest_potential_integral(rho, R, l, samples, rng);
  return {lhs, rhs, rhs > 0.0 ? lhs / rhs : kNaN};
}

double indirect_constant(int d, double lambda) {
  const RieszKernel k(d, lambda);
  const double q = 1.0 + lambda / d;
  const double maximal = q * std::pow(2.0, q) * std::pow(3.0, d) / (q - 1.0);
  return 0.5 * fdll_constant(k) * (1.0 / (d - lambda) + 1.0 / lambda) * std::pow(unit_ball_volume(d), q) *
         maximal;
}

IndirectGap indirect_gap(const ProductMeasure& mu, const RieszKernel& k, std::size_t samples, Rng& rng) {
  if (mu.factors.empty()) throw ParamError("indirect_gap: empty product");
  const double l = k.lambda();
  double gap = 0.0;
  for (const auto& f : mu.factors) {
    if (std::abs(f.mass() - 1.0) > 1e-12) throw ParamError("indirect_gap: factors must be probability densities");
    gap -= f.riesz_energy(l);
  }
  const double bound = mu.marginal().lp_integral(1.0 + l / k.dim(), samples, rng);
  return {gap, bound, -gap / bound, 0.0};
}

IndirectGap indirect_gap(const SlaterState& st, const RieszKernel& k, std::size_t samples, Rng& rng,
                         std::size_t grid_n) {
  const int d = st.dim();
  if (k.dim() != d) throw ParamError("indirect_gap: dimension mismatch");
  if (st.N() < 2) throw ParamError("indirect_gap: need N >= 2");
  if (samples == 0) throw ParamError("indirect_gap: need samples > 0");
  const double l = k.lambda();
  const std::size_t N = st.N();
  std::vector<double> pair(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto X = sample_slater_points(st, rng);
    pair[i] = pair_sum(PointConfig(d, X), l);
  }
  const MeanVar pm = mean_and_error(pair);
  const double half = 0.5 * (st.L() + st.ell());
  const double h = 2.0 * half / double(grid_n);
  const auto rho = CartesianDensity::sample(d, grid_n, h, -half, [&](std::span<const double> x) {
    return st.density(x);
  });
  const double D = riesz_energy(rho, k);
  const double q = 1.0 + l / d;
  const double bound = std::pow(double(N) / std::pow(st.L(), d), q) * st.profile_power_integral(q);
  const double gap = pm.mean - D;
  return {gap, bound, -gap / bound, pm.std_error};
}

NearestNeighborGap nearest_neighbor_gap(const SlaterState& st, const Params& p, std::size_t samples, Rng& rng) {
  const int d = st.dim();
  if (p.d() != d) throw ParamError("nearest_neighbor_gap: dimension mismatch");
  if (st.N() < 2) throw ParamError("nearest_neighbor_gap: need N >= 2");
  if (samples == 0) throw ParamError("nearest_neighbor_gap: need samples > 0");
  const double s2 = 2.0 * p.s();
  const std::size_t N = st.N();
  std::vector<double> terms(samples);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const PointConfig X(d, sample_slater_points(st, rng));
    double acc = 0.0;
    bool ok = true;
    for (std::size_t n = 0; n < N; ++n) {
      const double dn = std::pow(nearest_neighbor_distance(X, n), -s2);
      for (std::size_t m = 0; m < N; ++m) {
        if (m != n && dn < std::pow(distance(X[n], X[m]), -s2)) ok = false;
      }
      acc += dn;
    }
    if (!ok) ++bad;
    terms[i] = acc;
  }
  const MeanVar mv = mean_and_error(terms);
  const double kin = slater_kinetic(st, p);
  return {kin, mv.mean, kin / mv.mean, mv.std_error, bad};
}

SweepReport elementary_scan(int d, double s, std::size_t trials, std::uint64_t seed) {
  if (d < 1 || d > 4) throw ParamError("elementary_scan: need 1 <= d <= 4");
  if (!(s > 0.5 && s <= 1.0)) throw ParamError("elementary_scan: need 1/2 < s <= 1");
  SweepReport r;
  r.id = "elementary";
  r.d = d;
  r.exponent_name = "s";
  r.exponent = s;
  r.trials = trials;
  r.seed = seed;
  r.ranges = "xi, zeta Gaussian times log-uniform scale in [1e-3, 1e3]; 1 in 8 trials zeta in {0, xi, -xi}";
  Rng rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> a(d), b(d);
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const double sa = std::pow(10.0, 6.0 * u(rng) - 3.0), sb = std::pow(10.0, 6.0 * u(rng) - 3.0);
    for (int i = 0; i < d; ++i) {
      a[i] = sa * g(rng);
      b[i] = sb * g(rng);
    }
    const double special = u(rng);
    if (special < 1.0 / 24.0) {
      std::fill(b.begin(), b.end(), 0.0);
    } else if (special < 2.0 / 24.0) {
      b = a;
    } else if (special < 3.0 / 24.0) {
      for (int i = 0; i < d; ++i) b[i] = -a[i];
    }
    double a2 = 0.0, b2 = 0.0, p2 = 0.0, m2 = 0.0;
    for (int i = 0; i < d; ++i) {
      a2 += a[i] * a[i];
      b2 += b[i] * b[i];
      p2 += (a[i] + b[i]) * (a[i] + b[i]);
      m2 += (a[i] - b[i]) * (a[i] - b[i]);
    }
    const double left = 0.5 * (std::pow(p2, s) + std::pow(m2, s));
    const double mid = std::pow(a2 + b2, s);
    const double right = std::pow(a2, s) + std::pow(b2, s);
    const double tol = 1e-12 * right;
    if (left > mid + tol || mid > right + tol) ++r.violations;
    if (mid > 0.0) worst = std::max({worst, left / mid, mid / right});
  }
  r.empirical_constant = worst;
  r.proof_constant = 1.0;
  r.note = "max of left/middle and middle/right";
  return r;
}

SweepReport screened_count_scan(std::size_t trials, std::uint64_t seed) {
  SweepReport r;
  r.id = "screened";
  r.trials = trials;
  r.seed = seed;
  r.ranges = "Z log-uniform in [1e-2, 1e2]; n/Z log-uniform in [1e-6, 1e3], n = 0 in 1 of 16; K' in 0..50";
  Rng rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> kd(0, 50);
  double worst = -std::numeric_limits<double>::infinity();
  double arg_n = 0.0, arg_z = 0.0;
  int arg_k = -1;
  for (std::size_t t = 0; t < trials; ++t) {
    const double Z = std::pow(10.0, 4.0 * u(rng) - 2.0);
    const double n = u(rng) < 1.0 / 16.0 ? 0.0 : Z * std::pow(10.0, 9.0 * u(rng) - 6.0);
    const int K = kd(rng);
    const double lhs = Z * n * K - 0.5 * Z * Z * K * (K - 1.0) - 0.5 * n * n;
    const double rhs = K >= 1 ? Z * n : 0.0;
    const double scale = Z * n * K + 0.5 * Z * Z * K * K + 0.5 * n * n;
    if (lhs > rhs + 1e-12 * scale) ++r.violations;
    if (rhs > 0.0 && lhs / rhs > worst) {
      worst = lhs / rhs;
      arg_n = n;
      arg_z = Z;
      arg_k = K;
    }
  }
  r.empirical_constant = worst;
  r.proof_constant = 1.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "argmax n=%.6g Z=%.6g K'=%d", arg_n, arg_z, arg_k);
  r.note = buf;
  return r;
}

double ltvu_constant(int d, double s) {
  if (!(d > 2.0 * s)) throw ParamError("ltvu_constant: need d > 2s");
  const double al = 0.5 * (d + 2.0 * s);
  const double A = std::pow(kPi, 0.5 * d) * std::pow(hardylab::gamma(0.5 * (d - al)), 2) * hardylab::gamma(s) /
                   (std::pow(hardylab::gamma(0.5 * al), 2) * hardylab::gamma(0.5 * (d - 2.0 * s)));
  const double B = sphere_area(d) * std::pow(2.0, 2.0 * s) / (2.0 * s);
  return std::max(2.0 * A, B);
}

Ratio ltvu_integral_check(const PointConfig& R, const Params& p, std::size_t samples, Rng& rng) {
  const int d = p.d();
  if (R.dim() != d) throw ParamError("ltvu_integral_check: dimension mismatch");
  if (R.size() < 2) throw ParamError("ltvu_integral_check: need K >= 2");
  if (p.borderline()) throw ParamError("ltvu_integral_check: need d > 2s");
  if (samples == 0) throw ParamError("ltvu_integral_check: need samples > 0");
  R.require_distinct();
  const double s = p.s();
  const std::size_t K = R.size();
  const VoronoiPotentials vp(R, s);
  const double expo = 1.0 + d / (2.0 * s);
  // mixture of radial beta-prime laws around each R_k, scale delta_k / 2
  const double gam = s;
  std::vector<double> scale(K), norm(K);
  const double beta = std::exp(log_gamma(double(d)) + log_gamma(gam) - log_gamma(d + gam));
  for (std::size_t k = 0; k < K; ++k) {
    scale[k] = 0.5 * nearest_neighbor_distance(R, k);
    norm[k] = 1.0 / (sphere_area(d) * std::pow(scale[k], d) * beta);
  }
  std::gamma_distribution<double> ga(double(d), 1.0), gb(gam, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, K - 1);
  std::vector<double> y(d), dir(d), vals(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t k = pick(rng);
    random_direction(d, rng, dir);
    const double t = ga(rng) / gb(rng);
    for (int a = 0; a < d; ++a) y[a] = R[k][a] + scale[k] * t * dir[a];
    double q = 0.0;
    for (std::size_t j = 0; j < K; ++j) {
      const double r = distance(y, R[j]);
      q += norm[j] * std::pow(1.0 + r / scale[j], -d - gam);
    }
    q /= double(K);
    const double v = vp.V(y);
    vals[i] = v > 0.0 ? std::pow(v, expo) / q : 0.0;
  }
  const double lhs = pairwise_sum(vals) / double(samples);
  const double rhs = std::pow(double(K), (d - 2.0 * s) / (2.0 * s)) * vp.U();
  return {lhs, rhs, lhs / rhs};
}

double partition_identity_check(const PointConfig& X, int M, double Z, const Params& p) {
  const int N = int(X.size());
  if (N < 3 || N > 8) throw ParamError("partition_identity_check: need 3 <= N <= 8");
  if (M < 1 || M > N - 2) throw ParamError("partition_identity_check: need 1 <= M <= N - 2");
  const int K = N - M;
  const double denom = 2.0 * Z * M * K - Z * Z * K * (K - 1.0);
  if (!(std::abs(denom) > 1e-12 * (2.0 * Z * M * K + Z * Z * K * K))) {
    throw ParamError("partition_identity_check: degenerate prefactor");
  }
  X.require_distinct();
  const double l = p.lambda();
  std::vector<double> w(std::size_t(N) * N, 0.0);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (a != b) w[std::size_t(a) * N + b] = std::pow(distance(X[a], X[b]), -l);
  std::vector<double> pairs;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) pairs.push_back(w[std::size_t(a) * N + b]);
  const double lhs = pairwise_sum(pairs);

  std::vector<double> terms;
  double count = 0.0;
  for (unsigned mask = 0; mask < (1u << N); ++mask) {
    if (std::popcount(mask) != M) continue;
    count += 1.0;
    double t = 0.0;
    for (int a = 0; a < N; ++a) {
      if (!(mask >> a & 1u)) continue;
      for (int b = 0; b < N; ++b)
        if (!(mask >> b & 1u)) t += Z * w[std::size_t(a) * N + b];
    }
    for (int a = 0; a < N; ++a) {
      if (mask >> a & 1u) continue;
      for (int b = a + 1; b < N; ++b)
        if (!(mask >> b & 1u)) t -= Z * Z * w[std::size_t(a) * N + b];
    }
    terms.push_back(t);
  }
  const double rhs = double(M) * (N - 1.0) / denom * (double(N) / M) / count * pairwise_sum(terms);
  return std::abs(lhs - rhs) / std::abs(lhs);
}

LevyLeblondPlan levy_leblond_plan(int N, const Params& p, double tau, PlanMode mode, double eps) {
  if (N < 3) throw ParamError("levy_leblond_plan: need N >= 3");
  const int d = p.d();
  const double s = p.s();
  LevyLeblondPlan out{};
  out.mode = mode;
  out.N = N;
  if (mode == PlanMode::main) {
    out.K = int(std::floor(std::pow(double(N), s / d + 0.5)));
  } else {
    if (!(tau > 0.0)) throw ParamError("levy_leblond_plan: need tau > 0");
    if (!(eps > 0.0)) throw ParamError("levy_leblond_plan: need eps > 0");
    out.K = int(std::floor(eps / tau * std::pow(double(N), 2.0 * s / d)));
  }
  if (out.K < 1 || out.K >= N - 1) {
    throw ParamError("levy_leblond_plan: N too small for the K formula (need 1 <= K < N - 1)");
  }
  out.M = N - out.K;
  const double M = out.M, K = out.K;
  if (mode == PlanMode::main) {
    out.Z_or_lambda = M / K;
    out.alpha = kNaN;
    const double Z = out.Z_or_lambda;
    // leading factor of the constant in front of the kinetic energy
    out.kappa_target = M * (N - 1.0) / (2.0 * Z * M * K - Z * Z * K * (K - 1.0)) * std::pow(M / N, 1.0 - 2.0 * s / d);
    out.residual_balance = std::abs(Z * K - M);
    out.residual_pairs = 0.0;
  } else {
    const double lam = 0.5 * tau;
    out.Z_or_lambda = lam;
    out.alpha = lam * M / K;
    out.kappa_target = tau * (K + 1.0) / (2.0 * (N - 1.0));
    out.residual_balance = std::abs(lam * M + out.alpha * K - tau * M);
    out.residual_pairs = std::abs(2.0 * lam * M * K - out.alpha * K * (K - 1.0) - out.kappa_target * M * (N - 1.0));
  }
  return out;
}

}  // namespace hardylab
