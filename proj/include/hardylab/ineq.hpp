#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hardylab/core.hpp"
#include "hardylab/manybody.hpp"
#include "hardylab/marginal.hpp"
#include "hardylab/riesz.hpp"

namespace hardylab {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct SweepReport {
  std::string id;
  int d = 0;
  /// "s" or "lambda"
  std::string exponent_name;
  double exponent = kNaN;
  std::size_t trials = 0;
  std::size_t violations = 0;
  /// max over trials of lhs/rhs (or the sweep's own figure of merit)
  double empirical_constant = kNaN;
  /// explicit constant from the proof, NaN when the check is exact
  double proof_constant = kNaN;
  /// empirical constant recomputed with twice the Monte Carlo samples
  double constant_doubled = kNaN;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::string ranges;
  std::string note;

  /// |doubled / constant - 1|, NaN when no doubling was run
  double stability() const;
};

struct Ratio {
  double lhs;
  double rhs;
  /// lhs / rhs, NaN when rhs <= 0
  double ratio;
};

// ---- electrostatic ----

/// Constant of the electrostatic bound as it comes out of the ball
/// decomposition: c_fdll omega_d 2^lambda / lambda.
double electrostatic_constant(int d, double lambda);

/// lhs = Z int rho sum_k |y - R_k|^-l - Z^2 sum_{k<l} |R_k - R_l|^-l - D_l[rho]
/// in closed form; rhs = Z int rho delta_R^-l by importance sampling. Only the
/// summed marginal rho of the measure enters either side.
Ratio electrostatic_gap(const GaussianMixture& rho, const PointConfig& R, double Z, const RieszKernel& k,
                        std::size_t samples, Rng& rng);

/// Unbiased estimate of int rho delta_R^-lambda. Half the samples come from
/// rho, half from |y - R_k|^-lambda on unit balls around the R_k.
double nearest_potential_integral(const GaussianMixture& rho, const PointConfig& R, double lambda,
                                  std::size_t samples, Rng& rng);

// ---- indirect energy ----

/// Constant of the indirect bound: 1/2 c_fdll (1/(d-l) + 1/l) omega_d^q C_M,
/// q = 1 + l/d, with C_M = q 2^q 3^d / (q - 1) the L^q bound of the
/// Hardy-Littlewood maximal function.
double indirect_constant(int d, double lambda);

struct IndirectGap {
  /// E sum_{n<m} |X_n - X_m|^-l - D_l[rho_mu]
  double gap;
  /// int rho_mu^{1+l/d}
  double bound;
  /// -gap / bound
  double ratio;
  /// gap's Monte Carlo standard error (0 when exact)
  double std_error;
};

/// Product measures: the gap is -sum_n D[rho_n], exact.
IndirectGap indirect_gap(const ProductMeasure& mu, const RieszKernel& k, std::size_t samples, Rng& rng);
/// Slater measure |u|^2: pair sum by determinantal sampling, D[rho_u] on a
/// Cartesian grid of `grid_n` cells per axis, int rho_u^q from the profile.
IndirectGap indirect_gap(const SlaterState& st, const RieszKernel& k, std::size_t samples, Rng& rng,
                         std::size_t grid_n = 48);

// ---- nearest neighbours ----

struct NearestNeighborGap {
  double kinetic;
  /// E sum_n delta_n(X)^-2s
  double nn_term;
  double ratio;
  double std_error;
  /// configurations where delta_n^-2s < max_m |X_n - X_m|^-2s for some n
  std::size_t inconsistent;
};

NearestNeighborGap nearest_neighbor_gap(const SlaterState& st, const Params& p, std::size_t samples, Rng& rng);

// ---- elementary and counting inequalities ----

/// 1/2 (|a+b|^2s + |a-b|^2s) <= (|a|^2 + |b|^2)^s <= |a|^2s + |b|^2s, 1/2 < s <= 1.
SweepReport elementary_scan(int d, double s, std::size_t trials, std::uint64_t seed);

/// Z n K - Z^2 K(K-1)/2 - n^2/2 <= Z n [K >= 1] for n >= 0, Z > 0, K in 0..50.
SweepReport screened_count_scan(std::size_t trials, std::uint64_t seed);

// ---- Voronoi potential ----

/// max(2A, B) with A the constant of |x|^{-a} * |x|^{-a} = A |x|^{-2s},
/// a = (d + 2s)/2, and B = |S^{d-1}| 2^{2s} / (2s).
double ltvu_constant(int d, double s);

/// lhs = int V_R^{1+d/2s} by importance sampling; rhs = K^{(d-2s)/2s} U_R.
Ratio ltvu_integral_check(const PointConfig& R, const Params& p, std::size_t samples, Rng& rng);

// ---- Levy-Leblond partition identity ----

/// |LHS - RHS| / |LHS| of the partition average, enumerating all
/// binom(N, M) splits. Requires N <= 8 and 1 <= M <= N - 2.
double partition_identity_check(const PointConfig& X, int M, double Z, const Params& p);

enum class PlanMode { main, lambda_alpha };

struct LevyLeblondPlan {
  PlanMode mode;
  int N, M, K;
  /// Z in main mode, lambda in lambda_alpha mode
  double Z_or_lambda;
  double alpha;
  double kappa_target;
  /// |lambda M + alpha K - tau M| and |2 lambda M K - alpha K(K-1) - kappa M(N-1)|
  double residual_balance;
  double residual_pairs;
};

LevyLeblondPlan levy_leblond_plan(int N, const Params& p, double tau, PlanMode mode, double eps = 0.5);

// ---- sweeps ----

struct SweepOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::size_t samples = 4000;
  /// rerun every trial with twice the samples
  bool check_stability = false;
};

SweepReport sweep_electrostatic(int d, double lambda, const SweepOptions& o);
SweepReport sweep_indirect(int d, double lambda, const SweepOptions& o);
/// Fixed mixture dilated by t = 2^{-k}, k = 0..steps-1.
SweepReport sweep_indirect_dilation(int d, double lambda, int steps, const SweepOptions& o);
SweepReport sweep_indirect_slater(double lambda, const SweepOptions& o);
SweepReport sweep_nearest_neighbor(const Params& p, const SweepOptions& o);
SweepReport sweep_ltvu(const Params& p, const SweepOptions& o);
/// Random X and Z with N drawn from n_min..n_max and M from 1..N-2, or
/// M = fixed_M when nonzero.
SweepReport sweep_partition(const Params& p, int n_min, int n_max, int fixed_M, const SweepOptions& o);
SweepReport sweep_sublevel(int d, const SweepOptions& o);
SweepReport sweep_fdll(int d, double lambda, const SweepOptions& o);

}  // namespace hardylab
