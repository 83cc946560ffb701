// Acceptance checks. One PASS/FAIL line per criterion; exit status is
// nonzero when a criterion fails that is not on the known-failure list.
//
// usage: acceptance <path-to-hardylab-cli>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hardylab/coherent.hpp"
#include "hardylab/core.hpp"
#include "hardylab/ineq.hpp"
#include "hardylab/manybody.hpp"
#include "hardylab/riesz.hpp"
#include "hardylab/variational.hpp"

using namespace hardylab;
using std::numbers::pi;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  // sub-checks that failed
  std::vector<std::string> failed;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failed.push_back(what);
    }
  }
  void note(const std::string& s) {
    if (!detail.empty()) detail += "; ";
    detail += s;
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// ---- 1 ----
Outcome thomas_fermi() {
  Outcome o;
  const double a = c_tf(validate_params(3, 1.0));
  const double b = c_tf(validate_params(4, 1.0));
  const double ea = 0.6 * std::pow(6.0 * pi * pi, 2.0 / 3.0);
  const double eb = 8.0 * pi / 3.0 * std::sqrt(2.0);
  o.check(rel(a, ea) <= 1e-12, "c_tf(3,1)");
  o.check(rel(b, eb) <= 1e-12, "c_tf(4,1)");
  o.note("rel err " + fmt("%.1e", rel(a, ea)) + ", " + fmt("%.1e", rel(b, eb)));
  return o;
}

// ---- 2 ----
Outcome fdll() {
  Outcome o;
  double worst = 0.0;
  for (auto [d, lam] : {std::pair{3, 1.0}, {3, 2.0}, {1, 0.5}, {2, 1.0}}) {
    const RieszKernel k(d, lam);
    for (int i = 0; i < 20; ++i) {
      const double r = std::pow(10.0, -1.0 + 2.0 * i / 19.0);
      std::vector<double> y(d, 0.0), yp(d, 0.0);
      yp[0] = r;
      const double e = rel(fdll_reconstruct(y, yp, k), std::pow(r, -lam));
      worst = std::max(worst, e);
      if (e > 1e-3) o.check(false, "d=" + std::to_string(d) + " lambda=" + fmt("%g", lam) + " r=" + fmt("%g", r));
    }
  }
  o.note("80 points, r in [0.1, 10], max rel err " + fmt("%.2e", worst));
  return o;
}

// ---- 3 ----
Outcome tau_solver() {
  Outcome o;
  for (auto [d, s] : {std::pair{3, 1.0}, {3, 0.5}, {4, 1.0}}) {
    const Params p = validate_params(d, s);
    const std::string tag = "(" + std::to_string(d) + "," + fmt("%g", s) + ")";
    auto run = [&](std::size_t n, bool ball) {
      GridSpec g;
      g.n = n;
      const auto init = ball ? ball_density(d, g.radii(), 1.0) : gaussian_density(d, g.radii());
      auto r = minimize_functional({FunctionalKind::tau, p, g}, init);
      for (std::size_t i = 1; i < r.history.size(); ++i) {
        if (r.history[i] > r.history[i - 1]) {
          o.check(false, tag + " non-monotone");
          break;
        }
      }
      return r;
    };
    const auto coarse = run(256, false);
    const auto fine = run(512, false);
    const auto restart = run(512, true);
    o.check(rel(restart.value, fine.value) <= 5e-3, tag + " restart");
    o.check(rel(coarse.value, fine.value) <= 1e-2, tag + " refinement");
    const double mass = fine.density.mass();
    const double lp = fine.density.lp_integral(p.q());
    const double D = riesz_energy(fine.density, RieszKernel(d, 2.0 * s));
    o.check(std::abs(mass - 1.0) <= 1e-6 && std::abs(lp - 1.0) <= 1e-6, tag + " normalization");
    o.check(std::abs(D * fine.value - 1.0) <= 1e-6, tag + " D = 1/tau");
    o.note(tag + " tau " + fmt("%.7f", fine.value) + " restart " + fmt("%.1e", rel(restart.value, fine.value)) +
           " refine " + fmt("%.1e", rel(coarse.value, fine.value)));
  }
  return o;
}

// ---- 4 ----
Outcome partition() {
  Outcome o;
  const Params p = validate_params(3, 1.0);
  Rng rng(derive_seed(2024, 4));
  std::normal_distribution<double> G;
  std::uniform_real_distribution<double> U(0.2, 3.0);
  double worst = 0.0;
  int cases = 0;
  for (int N = 3; N <= 6; ++N) {
    for (int M = 1; M <= N - 2; ++M) {
      for (int x = 0; x < 3; ++x) {
        std::vector<double> c(3 * N);
        for (auto& v : c) v = G(rng);
        const PointConfig X(3, c);
        for (int z = 0; z < 2; ++z) {
          double Z = U(rng);
          const double K = N - M;
          while (std::abs(2.0 * Z * M * K - Z * Z * K * (K - 1.0)) < 1e-3 * Z * M * K) Z = U(rng);
          worst = std::max(worst, partition_identity_check(X, M, Z, p));
          ++cases;
        }
      }
    }
  }
  o.check(worst <= 1e-10, "residual");
  o.note(std::to_string(cases) + " cases, max residual " + fmt("%.1e", worst));
  return o;
}

// ---- 5 ----
Outcome sweeps() {
  Outcome o;
  SweepOptions so;
  so.trials = 1000;
  so.samples = 2000;
  so.seed = 1;
  so.check_stability = true;
  std::vector<SweepReport> reps;
  for (double lam : {0.5, 1.0, 1.5}) reps.push_back(sweep_electrostatic(3, lam, so));
  reps.push_back(sweep_indirect(3, 1.0, so));
  reps.push_back(elementary_scan(3, 0.75, 1000000, so.seed));
  reps.push_back(screened_count_scan(1000000, so.seed));
  reps.push_back(sweep_ltvu(validate_params(3, 0.5), so));
  reps.push_back(sweep_sublevel(3, so));
  std::size_t total = 0;
  double worst_stab = 0.0;
  for (const auto& r : reps) {
    const std::string tag = r.id + "(" + r.exponent_name + "=" + fmt("%g", r.exponent) + ")";
    o.check(r.trials >= 1000, tag + " trials");
    o.check(r.violations == 0, tag + " violations");
    total += r.violations;
    // exact checks have no Monte Carlo part to double
    const double st = r.stability();
    if (std::isfinite(st)) {
      worst_stab = std::max(worst_stab, st);
      o.check(st <= 0.2, tag + " stability");
    }
  }
  o.note(std::to_string(reps.size()) + " sweeps, violations " + std::to_string(total) + ", worst stability " +
         fmt("%.3f", worst_stab));
  return o;
}

// ---- 6 ----
// Sub-checks that fail at desk scale and are documented as such.
const std::set<std::string> kKnownFailures = {"direct ratio at N=1000", "(ln N) Q <= 6 at N=3200"};

Outcome slater_pipeline() {
  Outcome o;
  const Params p = validate_params(2, 1.0, true);
  const double L = 2.0 * pi;
  {
    const auto st = SlaterState::with_particle_count(2, L, 500);
    const double g = gram_deviation(st);
    o.check(g <= 1e-8, "Gram");
    o.note("Gram dev " + fmt("%.1e", g) + " (N=500)");
  }
  std::vector<double> lnq;
  std::string kin;
  for (std::size_t N : {200, 500, 800, 1000, 3200}) {
    const auto st = SlaterState::with_particle_count(2, L, N);
    const double mu = st.fermi_mu();
    const double lead = mu * mu * L * L / (8.0 * pi);
    if (N >= 500) {
      const double r = slater_kinetic(st, p) / lead;
      o.check(r >= 0.9 && r <= 1.1, "kinetic N=" + std::to_string(N));
      kin += (kin.empty() ? "" : ",") + fmt("%.3f", r);
    }
    if (N == 1000) {
      const auto in = slater_interaction(st, p);
      const double r = in.direct_omega / (mu * mu * L * L * std::log(double(N)) / (16.0 * pi));
      o.check(r >= 0.8 && r <= 1.2, "direct ratio at N=1000");
      o.note("direct ratio " + fmt("%.3f", r));
    }
    if (N == 200 || N == 800 || N == 3200) lnq.push_back(std::log(double(N)) * hardy_quotient(st, p).quotient);
  }
  o.note("kinetic ratios " + kin);
  o.check(lnq[0] > lnq[1] && lnq[1] > lnq[2], "(ln N) Q decreasing");
  o.check(lnq[2] <= 6.0, "(ln N) Q <= 6 at N=3200");
  o.note("(ln N) Q = " + fmt("%.3f", lnq[0]) + ", " + fmt("%.3f", lnq[1]) + ", " + fmt("%.3f", lnq[2]));
  return o;
}

// ---- 7 ----
Outcome coherent() {
  Outcome o;
  const Params p = validate_params(1, 0.5, true);
  const std::size_t n = 400;
  const double half = 10.0, h = 2.0 * half / double(n);
  auto rho = CartesianDensity::sample(1, n, h, -half, [](std::span<const double> x) {
    return 4.0 * std::exp(-0.5 * x[0] * x[0]) / std::sqrt(2.0 * pi);
  });
  rho = rho.scaled(4.0 / rho.mass());
  const auto g = coherent_gamma(rho, 0.5, p);
  const auto& dg = g.diagnostics;
  o.check(dg.min_eigenvalue >= -1e-6 && dg.max_eigenvalue <= 1.0 + 1e-6, "spectrum");
  o.check(std::abs(dg.trace - 4.0) <= 1e-4, "trace");
  o.check(dg.density_l1_error <= 1e-4, "density");
  o.check(dg.slack_smeared >= -1e-6 && dg.slack_unsmeared >= -1e-6, "slack");
  o.note("spectrum [" + fmt("%.1e", dg.min_eigenvalue) + ", " + fmt("%.6f", dg.max_eigenvalue) + "], trace " +
         fmt("%.8f", dg.trace) + ", L1 " + fmt("%.1e", dg.density_l1_error) + ", slacks " +
         fmt("%.3f", dg.slack_smeared) + ", " + fmt("%.3f", dg.slack_unsmeared));
  return o;
}

// ---- 8 ----
Outcome lieb_thirring() {
  Outcome o;
  struct Case {
    int d;
    double s;
    std::size_t N;
  };
  const Case cases[] = {{1, 0.25, 10},  {1, 0.4, 60},  {2, 0.5, 20},  {2, 0.5, 200}, {2, 1.0, 20},
                        {2, 1.0, 500},  {3, 0.5, 19},  {3, 1.0, 7},   {3, 1.0, 123}};
  double worst = 1e300;
  for (const auto& c : cases) {
    const Params p = validate_params(c.d, c.s, true);
    const auto st = SlaterState::with_particle_count(c.d, 2.0 * pi, c.N);
    const double q = p.q();
    const double lp = std::pow(double(st.N()) / std::pow(st.L(), c.d), q) * st.profile_power_integral(q);
    const double r = slater_kinetic(st, p) / (semiclassical_constant(c.d, c.s) * lp);
    worst = std::min(worst, r);
    o.check(r >= 0.8, "d=" + std::to_string(c.d) + " s=" + fmt("%g", c.s) + " N=" + std::to_string(c.N));
  }
  o.note(std::to_string(std::size(cases)) + " states, min kinetic / (c_TF int rho^q) " + fmt("%.3f", worst));
  return o;
}

// ---- 9 ----
std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.check(false, "no CLI path given");
    return o;
  }
  const fs::path root = fs::temp_directory_path() / "hardylab_acceptance_det";
  fs::remove_all(root);
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"partition", "verify partition --N 5 --M 2 --seed 7"},
      {"electrostatic", "verify electrostatic --lambda 1 --trials 30 --samples 500 --seed 3"},
      {"predict", "predict --d 3 --s 1 --tau 0.2956544"},
      {"slater", "slater --d 2 --s 1 --allow-borderline --N 40"},
  };
  int compared = 0;
  for (const auto& [name, args] : runs) {
    for (const char* rep : {"a", "b"}) {
      const std::string cmd =
          "'" + cli + "' " + args + " --out '" + (root / rep / name).string() + "' > /dev/null 2>&1";
      const int rc = std::system(cmd.c_str());
      o.check(rc == 0, name + " exit status");
    }
    for (const char* ext : {".csv", ".json"}) {
      for (const auto& e : fs::directory_iterator(root / "a" / name)) {
        if (e.path().extension() != ext) continue;
        const auto other = root / "b" / name / e.path().filename();
        o.check(fs::exists(other) && slurp(e.path()) == slurp(other), name + "/" + e.path().filename().string());
        ++compared;
      }
    }
  }
  o.check(compared >= 8, "artifact count");
  o.note(std::to_string(compared) + " artifact pairs compared");
  fs::remove_all(root);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Entry {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> entries = {
      {1, "Thomas-Fermi constant", thomas_fermi},
      {2, "ball decomposition reconstruction", fdll},
      {3, "tau solver", tau_solver},
      {4, "partition identity", partition},
      {5, "inequality sweeps", sweeps},
      {6, "two-dimensional Slater pipeline", slater_pipeline},
      {7, "coherent-state density matrix", coherent},
      {8, "Lieb-Thirring on Slater states", lieb_thirring},
      {9, "determinism", [&] { return determinism(cli); }},
  };
  int unexpected = 0;
  for (const auto& e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o.check(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool only_known = !o.pass;
    std::string failed;
    for (const auto& f : o.failed) {
      if (!kKnownFailures.count(f)) only_known = false;
      failed += (failed.empty() ? "" : ", ") + f;
    }
    std::printf("%s [%d] %s: %s (%.1f s)", o.pass ? "PASS" : "FAIL", e.id, e.name, o.detail.c_str(), secs);
    if (!o.pass) std::printf(" | failed: %s%s", failed.c_str(), only_known ? " | known failure, documented" : "");
    std::printf("\n");
    std::fflush(stdout);
    if (!o.pass && !only_known) ++unexpected;
  }
  std::printf("%d unexpected failure(s)\n", unexpected);
  return unexpected == 0 ? 0 : 1;
}
