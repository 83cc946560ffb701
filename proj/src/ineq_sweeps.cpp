#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "hardylab/ineq.hpp"

namespace hardylab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SweepReport header(std::string id, int d, std::string name, double exponent, const SweepOptions& o) {
  SweepReport r;
  r.id = std::move(id);
  r.d = d;
  r.exponent_name = std::move(name);
  r.exponent = exponent;
  r.trials = o.trials;
  r.seed = o.seed;
  r.samples = o.samples;
  return r;
}

PointConfig random_points(int d, std::size_t K, double half, double min_sep, Rng& rng) {
  std::uniform_real_distribution<double> u(-half, half);
  std::vector<double> c(K * d);
  while (true) {
    for (auto& x : c) x = u(rng);
    PointConfig R(d, c);
    bool ok = true;
    for (std::size_t k = 0; k < K && ok; ++k)
      for (std::size_t l = k + 1; l < K && ok; ++l)
        if (distance(R[k], R[l]) < min_sep) ok = false;
    if (ok) return R;
  }
}

double log_uniform(double lo, double hi, Rng& rng) {
  return lo * std::pow(hi / lo, std::uniform_real_distribution<double>(0.0, 1.0)(rng));
}

GaussianMixture random_marginal(int d, Rng& rng) { return GaussianMixture::random(d, 1.0, 3, 2.0, 0.3, 1.5, rng); }

// Runs `trial(index, samples, rng)` for every trial, returning the ratio or
// figure of merit; `violated` flags a trial. The doubled pass reseeds each
// trial identically, so configurations match and only the sample count moves.
struct TrialOutcome {
  double merit;
  bool violated;
};

void run_trials(SweepReport& r, const SweepOptions& o, bool take_min,
                const std::function<TrialOutcome(std::size_t, std::size_t, Rng&)>& trial) {
  auto pass = [&](std::size_t samples, std::size_t* violations) {
    double best = take_min ? kInf : -kInf;
    for (std::size_t t = 0; t < o.trials; ++t) {
      Rng rng(derive_seed(o.seed, t));
      const TrialOutcome out = trial(t, samples, rng);
      if (violations && out.violated) ++*violations;
      if (std::isfinite(out.merit)) best = take_min ? std::min(best, out.merit) : std::max(best, out.merit);
    }
    return best;
  };
  r.empirical_constant = pass(o.samples, &r.violations);
  if (o.check_stability) r.constant_doubled = pass(2 * o.samples, nullptr);
}

}  // namespace

SweepReport sweep_electrostatic(int d, double lambda, const SweepOptions& o) {
  auto r = header("electrostatic", d, "lambda", lambda, o);
  const RieszKernel k(d, lambda);
  r.proof_constant = electrostatic_constant(d, lambda);
  r.ranges = "M, K in 1..5; Z log-uniform in [0.2, 5]; R uniform in [-3, 3]^d; rho sum of M mixtures";
  r.note = "constant = max lhs/rhs";
  const double C = r.proof_constant;
  run_trials(r, o, false, [&](std::size_t, std::size_t samples, Rng& rng) {
    std::uniform_int_distribution<int> mk(1, 5);
    const int M = mk(rng), K = mk(rng);
    const double Z = log_uniform(0.2, 5.0, rng);
    const PointConfig R = random_points(d, std::size_t(K), 3.0, 1e-3, rng);
    GaussianMixture rho = random_marginal(d, rng);
    for (int m = 1; m < M; ++m) rho = rho + random_marginal(d, rng);
    const Ratio q = electrostatic_gap(rho, R, Z, k, samples, rng);
    return TrialOutcome{q.ratio, q.lhs > C * q.rhs};
  });
  return r;
}

SweepReport sweep_indirect(int d, double lambda, const SweepOptions& o) {
  auto r = header("indirect", d, "lambda", lambda, o);
  const RieszKernel k(d, lambda);
  r.proof_constant = indirect_constant(d, lambda);
  r.ranges = "product measures, N in 1..5 factors, each a mixture of <= 3 Gaussians";
  r.note = "constant = max -gap / int rho^{1+lambda/d}";
  const double C = r.proof_constant;
  run_trials(r, o, false, [&](std::size_t, std::size_t samples, Rng& rng) {
    const int N = std::uniform_int_distribution<int>(1, 5)(rng);
    ProductMeasure mu;
    for (int n = 0; n < N; ++n) mu.factors.push_back(random_marginal(d, rng));
    const IndirectGap g = indirect_gap(mu, k, samples, rng);
    return TrialOutcome{g.ratio, -g.gap > C * g.bound};
  });
  return r;
}

SweepReport sweep_indirect_dilation(int d, double lambda, int steps, const SweepOptions& o) {
  if (steps < 2) throw ParamError("sweep_indirect_dilation: need at least 2 steps");
  auto r = header("indirect-dilation", d, "lambda", lambda, o);
  r.trials = std::size_t(steps);
  const RieszKernel k(d, lambda);
  r.proof_constant = indirect_constant(d, lambda);
  r.ranges = "fixed 3-factor product dilated by 2^-k, k = 0.." + std::to_string(steps - 1);
  r.note = "violation also when |gap| or int rho^q fails to grow";
  Rng base(o.seed);
  ProductMeasure mu;
  for (int n = 0; n < 3; ++n) mu.factors.push_back(random_marginal(d, base));
  auto pass = [&](std::size_t samples, std::size_t* violations) {
    double best = -kInf, prev_gap = 0.0, prev_bound = 0.0;
    for (int step = 0; step < steps; ++step) {
      ProductMeasure m;
      for (const auto& f : mu.factors) m.factors.push_back(f.dilated(std::pow(2.0, -step)));
      Rng rng(derive_seed(o.seed, 0));
      const IndirectGap g = indirect_gap(m, k, samples, rng);
      bool bad = -g.gap > r.proof_constant * g.bound;
      if (step > 0 && (!(-g.gap > prev_gap) || !(g.bound > prev_bound))) bad = true;
      if (violations && bad) ++*violations;
      prev_gap = -g.gap;
      prev_bound = g.bound;
      best = std::max(best, g.ratio);
    }
    return best;
  };
  r.empirical_constant = pass(o.samples, &r.violations);
  if (o.check_stability) r.constant_doubled = pass(2 * o.samples, nullptr);
  return r;
}

SweepReport sweep_indirect_slater(double lambda, const SweepOptions& o) {
  const int d = 2;
  auto r = header("indirect-slater", d, "lambda", lambda, o);
  const RieszKernel k(d, lambda);
  r.proof_constant = indirect_constant(d, lambda);
  r.ranges = "d = 2 Slater states on L = 1 with N in {2, 3, 5, 8, 12}; samples = DPP configurations";
  r.note = "constant = max -gap / int rho_u^{1+lambda/d}; gap carries Monte Carlo error";
  std::vector<SlaterState> states;
  for (std::size_t N : {2, 3, 5, 8, 12}) states.push_back(SlaterState::with_particle_count(d, 1.0, N));
  const double C = r.proof_constant;
  run_trials(r, o, false, [&](std::size_t t, std::size_t samples, Rng& rng) {
    const IndirectGap g = indirect_gap(states[t % states.size()], k, samples, rng);
    return TrialOutcome{g.ratio, -g.gap > C * g.bound};
  });
  return r;
}

SweepReport sweep_nearest_neighbor(const Params& p, const SweepOptions& o) {
  auto r = header("nn", p.d(), "s", p.s(), o);
  r.ranges = "Slater states on L = 2 pi with N in {2, 3, 5, 8}; samples = DPP configurations";
  r.note = "constant = min kinetic / E sum_n delta_n^-2s";
  if (p.borderline()) r.note += "; borderline d = 2s";
  std::vector<SlaterState> states;
  for (std::size_t N : {2, 3, 5, 8}) states.push_back(SlaterState::with_particle_count(p.d(), 2.0 * std::numbers::pi, N));
  run_trials(r, o, true, [&](std::size_t t, std::size_t samples, Rng& rng) {
    const NearestNeighborGap g = nearest_neighbor_gap(states[t % states.size()], p, samples, rng);
    return TrialOutcome{g.ratio, g.inconsistent > 0 || !(g.ratio > 0.0) || !std::isfinite(g.ratio)};
  });
  return r;
}

SweepReport sweep_ltvu(const Params& p, const SweepOptions& o) {
  auto r = header("ltvu", p.d(), "s", p.s(), o);
  r.proof_constant = ltvu_constant(p.d(), p.s());
  r.ranges = "K in 2..8 points uniform in [-1, 1]^d, separation >= 0.05";
  r.note = "constant = max int V_R^{1+d/2s} / (K^{(d-2s)/2s} U_R)";
  const double C = r.proof_constant;
  run_trials(r, o, false, [&](std::size_t, std::size_t samples, Rng& rng) {
    const std::size_t K = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    const PointConfig R = random_points(p.d(), K, 1.0, 0.05, rng);
    const Ratio q = ltvu_integral_check(R, p, samples, rng);
    return TrialOutcome{q.ratio, q.lhs > C * q.rhs};
  });
  return r;
}

SweepReport sweep_partition(const Params& p, int n_min, int n_max, int fixed_M, const SweepOptions& o) {
  if (n_min < 3 || n_max > 8 || n_min > n_max) throw ParamError("sweep_partition: need 3 <= N <= 8");
  if (fixed_M != 0 && (fixed_M < 1 || fixed_M > n_min - 2)) throw ParamError("sweep_partition: need 1 <= M <= N - 2");
  auto r = header("partition", p.d(), "s", p.s(), o);
  r.samples = 0;
  r.ranges = "N in " + std::to_string(n_min) + ".." + std::to_string(n_max) +
             (fixed_M ? ", M = " + std::to_string(fixed_M) : std::string(", M in 1..N-2")) + ", X uniform in [-1, 1]^d, Z log-uniform in [0.1, 3]";
  r.note = "constant = max relative residual; violation above 1e-10";
  SweepOptions once = o;
  once.check_stability = false;
  run_trials(r, once, false, [&](std::size_t, std::size_t, Rng& rng) {
    const int N = std::uniform_int_distribution<int>(n_min, n_max)(rng);
    const int M = fixed_M ? fixed_M : std::uniform_int_distribution<int>(1, N - 2)(rng);
    const PointConfig X = random_points(p.d(), std::size_t(N), 1.0, 1e-3, rng);
    double res;
    while (true) {
      const double Z = log_uniform(0.1, 3.0, rng);
      const int K = N - M;
      if (std::abs(2.0 * M - Z * (K - 1.0)) < 1e-6) continue;  // prefactor pole
      res = partition_identity_check(X, M, Z, p);
      break;
    }
    return TrialOutcome{res, !(res <= 1e-10)};
  });
  return r;
}

SweepReport sweep_sublevel(int d, const SweepOptions& o) {
  auto r = header("sublevel", d, "", kNaN, o);
  r.proof_constant = 1.0;
  r.ranges = "K in 1..6 points uniform in [-2, 2]^d; threshold log-uniform in [0.05, 2]";
  r.note = "constant = max measured / (omega_d K t^d)";
  run_trials(r, o, false, [&](std::size_t, std::size_t samples, Rng& rng) {
    const std::size_t K = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const PointConfig R = random_points(d, K, 2.0, 1e-3, rng);
    const double t = log_uniform(0.05, 2.0, rng);
    const SublevelVolume v = sublevel_volume(R, t, samples, rng);
    return TrialOutcome{v.measured / v.bound, v.measured > v.bound * (1.0 + 1e-12)};
  });
  return r;
}

SweepReport sweep_fdll(int d, double lambda, const SweepOptions& o) {
  auto r = header("fdll", d, "lambda", lambda, o);
  r.samples = kFdllDefaultResolution;
  r.ranges = "pairs with |y - y'| log-uniform in [1e-2, 1e2], random direction and offset";
  r.note = "constant = max relative reconstruction error; violation above 1e-3";
  const RieszKernel k(d, lambda);
  SweepOptions once = o;
  once.check_stability = false;
  run_trials(r, once, false, [&](std::size_t, std::size_t, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> y(d), yp(d), dir(d);
    double n2 = 0.0;
    for (int a = 0; a < d; ++a) {
      y[a] = 3.0 * g(rng);
      dir[a] = g(rng);
      n2 += dir[a] * dir[a];
    }
    const double D = log_uniform(1e-2, 1e2, rng);
    for (int a = 0; a < d; ++a) yp[a] = y[a] + D * dir[a] / std::sqrt(n2);
    const double exact = std::pow(distance(y, yp), -lambda);
    const double err = std::abs(fdll_reconstruct(y, yp, k) / exact - 1.0);
    return TrialOutcome{err, !(err <= 1e-3)};
  });
  return r;
}

}  // namespace hardylab
