// hardylab: command-line front end.
//
//   hardylab constants   --d 3 --s 1
//   hardylab solve-tau   --d 3 --s 1 --grid-n 512 --r-max 50
//   hardylab slater      --d 2 --s 1 --allow-borderline --N 800
//   hardylab verify partition --N 5 --M 2 --seed 7
//   hardylab predict     --d 3 --s 1 --tau 0.5
//
// Every run writes <out>/<name>.{csv,json,svg} for the requested formats and
// appends one line to <out>/ledger.jsonl.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hardylab/coherent.hpp"
#include "hardylab/core.hpp"
#include "hardylab/ineq.hpp"
#include "hardylab/manybody.hpp"
#include "hardylab/predictor.hpp"
#include "hardylab/report.hpp"
#include "hardylab/riesz.hpp"
#include "hardylab/variational.hpp"

using namespace hardylab;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParams = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitViolation = 4;

struct RunConfig {
  std::string command;
  std::string suite;
  int d = 3;
  double s = 1.0;
  std::size_t grid_n = 512;
  double r_max = 50.0;
  double L = 2.0 * std::numbers::pi;
  double mu = 0.0;
  long N = 0;
  int M = 0;
  double Z = 1.0;
  double tau = 0.0;
  double lambda = 0.0;
  double ell = 0.5;
  double ell_ratio = 1.0 / 32.0;
  double band = 1.0;
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  std::size_t trials = 0;
  double tol = 1e-9;
  std::string out = "hardylab-out";
  std::vector<std::string> formats{"csv", "json"};
  bool allow_borderline = false;
  std::string config_file;
  bool seed_from_env = false;

  ordered_json to_json() const {
    ordered_json j;
    j["command"] = command;
    if (!suite.empty()) j["suite"] = suite;
    j["d"] = d;
    j["s"] = s;
    j["grid_n"] = grid_n;
    j["r_max"] = r_max;
    j["L"] = L;
    j["mu"] = mu;
    j["N"] = N;
    j["M"] = M;
    j["Z"] = Z;
    j["tau"] = tau;
    j["lambda"] = lambda;
    j["ell"] = ell;
    j["ell_ratio"] = ell_ratio;
    j["band"] = band;
    j["seed"] = seed;
    j["samples"] = samples;
    j["trials"] = trials;
    j["tol"] = tol;
    j["formats"] = formats;
    j["allow_borderline"] = allow_borderline;
    return j;
  }
};

struct Output {
  std::string name;
  Table table;
  std::optional<Plot> plot;
  ordered_json meta = ordered_json::object();
};

std::string num(double v) { return format_number(v); }
std::string num(std::size_t v) { return format_number(std::int64_t(v)); }
std::string num(int v) { return format_number(std::int64_t(v)); }

// ---- commands ----

std::vector<Output> cmd_constants(const RunConfig& c, bool d_given, bool s_given) {
  Output o{"constants", {{"d", "s", "c_tf", "q", "remainder_exponent"}, {}}, {}, {}};
  std::vector<std::pair<int, double>> grid;
  if (d_given || s_given) {
    grid.push_back({c.d, c.s});
  } else {
    for (int d = 1; d <= 4; ++d)
      for (double s : {0.25, 0.5, 0.75, 1.0})
        if (2.0 * s < d) grid.push_back({d, s});
  }
  for (auto [d, s] : grid) {
    const Params p = validate_params(d, s, c.allow_borderline);
    o.table.add_row({num(d), num(s), num(c_tf(p)), num(p.q()), num(p.remainder_exponent())});
  }
  return {o};
}

std::vector<Output> cmd_solve(const RunConfig& c, FunctionalKind kind) {
  const Params p = validate_params(c.d, c.s, c.allow_borderline);
  GridSpec g;
  g.n = c.grid_n;
  g.r_max = c.r_max;
  OptimizerOptions opts;
  opts.tol = c.tol;
  const auto res = minimize_functional({kind, p, g}, gaussian_density(c.d, g.radii()), opts);
  bool monotone = true;
  for (std::size_t i = 1; i < res.history.size(); ++i)
    if (res.history[i] > res.history[i - 1]) monotone = false;
  const std::string name = kind == FunctionalKind::tau ? "tau" : "omega";
  Output summary{"solve-" + name,
                 {{"d", "s", "functional", "value", "iterations", "converged", "monotone", "mass", "lp_integral",
                   "riesz_energy", "grid_n", "r_max"},
                  {}},
                 {},
                 {}};
  const auto& rho = res.density;
  summary.table.add_row({num(c.d), num(c.s), name, num(res.value), num(res.iterations), res.converged ? "true" : "false",
                         monotone ? "true" : "false", num(rho.mass()), num(rho.lp_integral(p.q())),
                         num(riesz_energy(rho, RieszKernel(c.d, p.lambda()))), num(c.grid_n), num(c.r_max)});
  Output profile{"solve-" + name + "-density", {{"r", "rho"}, {}}, {}, {}};
  Series sr{"optimizer density rho(r)", {}, {}};
  for (std::size_t i = 0; i < rho.size(); ++i) {
    profile.table.add_row({num(rho.radii()[i]), num(rho.values()[i])});
    sr.x.push_back(rho.radii()[i]);
    sr.y.push_back(rho.values()[i]);
  }
  profile.plot = Plot{name + " optimizer, d = " + num(c.d) + ", s = " + num(c.s), "r", "rho(r)", true, true, {sr}};
  return {summary, profile};
}

std::vector<Output> cmd_slater(const RunConfig& c) {
  const Params p = validate_params(c.d, c.s, c.allow_borderline);
  const SlaterState st = c.N > 0 ? SlaterState::with_particle_count(c.d, c.L, std::size_t(c.N), c.ell_ratio)
                                 : (c.mu > 0.0 ? SlaterState::build(c.d, c.L, c.mu, std::nullopt, c.ell_ratio)
                                               : throw ParamError("slater: give --N or --mu"));
  const HardyQuotient hq = hardy_quotient(st, p);
  const double N = double(st.N());
  Output o{"slater",
           {{"d", "s", "L", "fermi_mu", "ell", "N", "gram_deviation", "kinetic", "interaction_estimate",
             "interaction_lower", "quotient", "scaled_quotient", "exchange_fraction", "min_pair_density"},
            {}},
           {},
           {}};
  const auto& in = hq.interaction;
  // N^{1-2s/d} scaling, ln N in the borderline case
  const double scaled = p.borderline() ? std::log(N) * hq.quotient : std::pow(N, 1.0 - 2.0 * c.s / c.d) * hq.quotient;
  o.table.add_row({num(c.d), num(c.s), num(st.L()), num(st.fermi_mu()), num(st.ell()), num(st.N()),
                   num(gram_deviation(st)), num(hq.kinetic), num(in.estimate), num(in.lower_bound), num(hq.quotient),
                   num(scaled), num(in.exchange_omega / in.direct_omega), num(in.min_pair_density)});
  return {o};
}

std::vector<Output> cmd_coherent(const RunConfig& c) {
  const Params p = validate_params(c.d, c.s, c.allow_borderline);
  const double mass = c.N > 0 ? double(c.N) : 4.0;
  const double half = c.r_max;
  const std::size_t n = c.grid_n;
  const double h = 2.0 * half / double(n);
  const int d = c.d;
  auto shape = [d](std::span<const double> x) {
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    return std::exp(-0.5 * r2) * std::pow(2.0 * std::numbers::pi, -0.5 * d);
  };
  const auto rho = CartesianDensity::sample(d, n, h, -half, [&](std::span<const double> x) { return mass * shape(x); });
  const auto g = coherent_gamma(rho.scaled(mass / rho.mass()), c.ell, p);
  const auto& dg = g.diagnostics;
  Output o{"coherent",
           {{"d", "s", "N", "grid_n", "half_width", "ell", "min_eigenvalue", "max_eigenvalue", "trace",
             "density_l1_error", "kinetic", "g_kinetic", "smeared_lp", "rho_lp", "slack_smeared", "slack_unsmeared"},
            {}},
           {},
           {}};
  o.table.add_row({num(d), num(c.s), num(mass), num(n), num(half), num(c.ell), num(dg.min_eigenvalue),
                   num(dg.max_eigenvalue), num(dg.trace), num(dg.density_l1_error), num(dg.kinetic), num(dg.g_kinetic),
                   num(dg.smeared_lp), num(dg.rho_lp), num(dg.slack_smeared), num(dg.slack_unsmeared)});
  return {o};
}

Table sweep_table() {
  return {{"id", "d", "exponent_name", "exponent", "trials", "violations", "empirical_constant", "proof_constant",
           "constant_doubled", "stability", "seed", "samples", "ranges", "note"},
          {}};
}

void add_sweep(Table& t, const SweepReport& r) {
  t.add_row({r.id, num(r.d), r.exponent_name, num(r.exponent), num(r.trials), num(r.violations),
             num(r.empirical_constant), num(r.proof_constant), num(r.constant_doubled), num(r.stability()),
             std::to_string(r.seed), num(r.samples), r.ranges, r.note});
}

std::vector<Output> cmd_verify(const RunConfig& c, std::size_t& violations) {
  static const std::set<std::string> suites{"electrostatic", "indirect", "nn", "elementary", "screened",
                                            "ltvu", "partition", "fdll", "sublevel"};
  if (!suites.count(c.suite)) throw ParamError("unknown suite '" + c.suite + "'");
  SweepOptions o;
  o.seed = c.seed;
  o.trials = c.trials ? c.trials : 1000;
  o.samples = c.samples ? c.samples : 2000;
  o.check_stability = true;
  const double lambda = c.lambda > 0.0 ? c.lambda : 2.0 * c.s;
  std::vector<SweepReport> reps;
  if (c.suite == "electrostatic") {
    if (c.lambda > 0.0) {
      reps.push_back(sweep_electrostatic(c.d, c.lambda, o));
    } else {
      for (double l : {0.5, 1.0, 1.5})
        if (l < c.d) reps.push_back(sweep_electrostatic(c.d, l, o));
    }
  } else if (c.suite == "indirect") {
    if (!(lambda < c.d)) throw ParamError("verify indirect: need lambda < d (set --lambda)");
    reps.push_back(sweep_indirect(c.d, lambda, o));
    reps.push_back(sweep_indirect_dilation(c.d, lambda, 10, o));
    if (lambda < 2.0) {
      SweepOptions so = o;
      so.trials = c.trials ? c.trials : 20;
      so.samples = c.samples ? c.samples : 400;
      reps.push_back(sweep_indirect_slater(lambda, so));
    }
  } else if (c.suite == "nn") {
    const Params p = validate_params(c.d, c.s, c.allow_borderline);
    SweepOptions so = o;
    so.trials = c.trials ? c.trials : 20;
    so.samples = c.samples ? c.samples : 400;
    reps.push_back(sweep_nearest_neighbor(p, so));
  } else if (c.suite == "elementary") {
    reps.push_back(elementary_scan(c.d, c.s, c.trials ? c.trials : 1000000, c.seed));
  } else if (c.suite == "screened") {
    reps.push_back(screened_count_scan(c.trials ? c.trials : 1000000, c.seed));
  } else if (c.suite == "ltvu") {
    reps.push_back(sweep_ltvu(validate_params(c.d, c.s, c.allow_borderline), o));
  } else if (c.suite == "partition") {
    const Params p = validate_params(c.d, c.s, c.allow_borderline);
    const int lo = c.N > 0 ? int(c.N) : 3, hi = c.N > 0 ? int(c.N) : 8;
    reps.push_back(sweep_partition(p, lo, hi, c.M, o));
  } else if (c.suite == "fdll") {
    reps.push_back(sweep_fdll(c.d, lambda, o));
  } else if (c.suite == "sublevel") {
    reps.push_back(sweep_sublevel(c.d, o));
  }
  Output out{"verify-" + c.suite, sweep_table(), {}, {}};
  for (const auto& r : reps) {
    add_sweep(out.table, r);
    violations += r.violations;
  }
  return {out};
}

std::vector<Output> cmd_predict(const RunConfig& c) {
  const Params p = validate_params(c.d, c.s, c.allow_borderline);
  const std::vector<double> Ns =
      c.N > 0 ? std::vector<double>{double(c.N)} : std::vector<double>{10, 30, 100, 300, 1e3, 3e3, 1e4, 1e5, 1e6};
  const auto refs = reference_lines(c.d, c.s);
  Output o{"predict", {{"N", "central", "band_lo", "band_hi"}, {}}, {}, {}};
  for (const auto& r : refs) o.table.columns.push_back(r.kind + ":" + r.label);
  Plot plot{"N^{1-2s/d} upper bound vs tau c^TF, d = " + num(c.d) + ", s = " + num(c.s), "N", "kappa_N", true, true,
            {}};
  if (p.borderline()) {
    if (c.d != 2) throw ParamError("predict: the borderline case is only modeled in d = 2");
    o.table.columns[1] = "conjecture_2d";
    const auto curve = conjecture_2d(Ns);
    Series s{kConjecture2dLabel, {}, {}};
    for (const auto& pt : curve) {
      std::vector<std::string> row{num(pt.N), num(pt.value), "nan", "nan"};
      for (const auto& r : refs) row.push_back(num(r.value(pt.N)));
      o.table.add_row(std::move(row));
      s.x.push_back(pt.N);
      s.y.push_back(pt.value);
    }
    plot.series.push_back(std::move(s));
    o.meta["band_rigorous"] = false;
  } else {
    double tau = c.tau;
    if (!(tau > 0.0)) {
      GridSpec g;
      g.n = c.grid_n;
      g.r_max = c.r_max;
      OptimizerOptions opts;
      opts.tol = c.tol;
      tau = minimize_functional({FunctionalKind::tau, p, g}, gaussian_density(c.d, g.radii()), opts).value;
    }
    const auto pred = predicted_kappa(p, tau, Ns, c.band);
    Series central{"tau c^TF N^{-1+2s/d}", {}, {}}, lo{"band low (non-rigorous constant)", {}, {}},
        hi{"band high (non-rigorous constant)", {}, {}};
    for (const auto& r : pred.rows) {
      std::vector<std::string> row{num(r.N), num(r.central), num(r.band_lo), num(r.band_hi)};
      for (const auto& ref : refs) row.push_back(num(ref.value(r.N)));
      o.table.add_row(std::move(row));
      central.x.push_back(r.N);
      central.y.push_back(r.central);
      lo.x.push_back(r.N);
      lo.y.push_back(r.band_lo);
      hi.x.push_back(r.N);
      hi.y.push_back(r.band_hi);
    }
    plot.series = {central, lo, hi};
    o.meta["tau_hat"] = tau;
    o.meta["c_tf"] = pred.c_tf;
    o.meta["remainder_exponent"] = pred.remainder_exponent;
    o.meta["band_constant"] = pred.band_constant;
    o.meta["band_rigorous"] = false;
  }
  for (const auto& r : refs) {
    Series s{r.kind + ": " + r.label, {}, {}};
    for (double N : Ns) {
      s.x.push_back(N);
      s.y.push_back(r.value(N));
    }
    plot.series.push_back(std::move(s));
  }
  o.plot = std::move(plot);
  return {o};
}

// ---- config ----

void apply_config(RunConfig& c, const std::string& path, const CLI::App& sub) {
  std::ifstream f(path);
  if (!f) throw ParamError("cannot read config file " + path);
  ordered_json j;
  try {
    j = ordered_json::parse(f);
  } catch (const std::exception& e) {
    throw ParamError("config file " + path + ": " + e.what());
  }
  if (!j.is_object()) throw ParamError("config file must hold a JSON object");
  auto given = [&](const std::string& flag) {
    const auto* opt = sub.get_option_no_throw("--" + flag);
    return opt && opt->count() > 0;
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string key = it.key();
    std::string flag = key;
    for (auto& ch : flag)
      if (ch == '_') ch = '-';
    if (given(flag)) continue;
    const auto& v = it.value();
    try {
      if (key == "d") c.d = v.get<int>();
      else if (key == "s") c.s = v.get<double>();
      else if (key == "grid_n") c.grid_n = v.get<std::size_t>();
      else if (key == "r_max") c.r_max = v.get<double>();
      else if (key == "L") c.L = v.get<double>();
      else if (key == "mu") c.mu = v.get<double>();
      else if (key == "N") c.N = v.get<long>();
      else if (key == "M") c.M = v.get<int>();
      else if (key == "Z") c.Z = v.get<double>();
      else if (key == "tau") c.tau = v.get<double>();
      else if (key == "lambda") c.lambda = v.get<double>();
      else if (key == "ell") c.ell = v.get<double>();
      else if (key == "ell_ratio") c.ell_ratio = v.get<double>();
      else if (key == "band") c.band = v.get<double>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "samples") c.samples = v.get<std::size_t>();
      else if (key == "trials") c.trials = v.get<std::size_t>();
      else if (key == "tol") c.tol = v.get<double>();
      else if (key == "out") c.out = v.get<std::string>();
      else if (key == "format") c.formats = v.is_array() ? v.get<std::vector<std::string>>() : std::vector{v.get<std::string>()};
      else if (key == "allow_borderline") c.allow_borderline = v.get<bool>();
      else throw ParamError("config file: unknown key '" + key + "'");
    } catch (const nlohmann::json::exception& e) {
      throw ParamError("config file: bad value for '" + key + "': " + e.what());
    }
  }
}

std::vector<fs::path> emit(const RunConfig& c, const std::vector<Output>& outs) {
  std::vector<fs::path> written;
  const ordered_json cfg = c.to_json();
  for (const auto& o : outs) {
    for (const auto& fmt : c.formats) {
      const fs::path path = fs::path(c.out) / (o.name + "." + fmt);
      if (fmt == "csv") {
        write_text(path, to_csv(o.table));
      } else if (fmt == "json") {
        ordered_json j;
        j["name"] = o.name;
        j["config"] = cfg;
        if (!o.meta.empty()) j["meta"] = o.meta;
        j["rows"] = to_json(o.table);
        write_text(path, j.dump(2) + "\n");
      } else if (fmt == "svg") {
        if (!o.plot) continue;
        write_text(path, to_svg(*o.plot));
      } else {
        throw ParamError("unsupported format '" + fmt + "'");
      }
      written.push_back(path);
    }
  }
  return written;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Many-particle Hardy inequality lab"};
  app.require_subcommand(1);
  RunConfig c;
  const std::pair<const char*, const char*> commands[] = {
      {"constants", "Thomas-Fermi constant c_TF(d, s)"},
      {"solve-tau", "minimize the tau functional on a radial grid"},
      {"solve-omega", "minimize the omega functional on a radial grid"},
      {"slater", "mollified plane-wave Slater state: kinetic, interaction, Hardy quotient"},
      {"coherent", "coherent-state density matrix and its diagnostics"},
      {"verify", "randomized inequality sweeps"},
      {"predict", "asymptotic kappa_N curves and reference lines"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--d", c.d, "dimension");
    sub->add_option("--s", c.s, "kinetic exponent");
    sub->add_option("--grid-n", c.grid_n, "grid points (radial) or cells per axis (Cartesian)");
    sub->add_option("--r-max", c.r_max, "outer radius or half-width of the grid");
    sub->add_option("--L", c.L, "box side");
    sub->add_option("--mu", c.mu, "Fermi level");
    sub->add_option("--N", c.N, "particle count");
    sub->add_option("--M", c.M, "partition size");
    sub->add_option("--Z", c.Z, "charge");
    sub->add_option("--tau", c.tau, "tau_hat (solved for when absent)");
    sub->add_option("--lambda", c.lambda, "Riesz exponent (default 2s)");
    sub->add_option("--ell", c.ell, "coherent-state width");
    sub->add_option("--ell-ratio", c.ell_ratio, "mollifier width over L");
    sub->add_option("--band", c.band, "remainder band constant (non-rigorous)");
    sub->add_option("--seed", c.seed, "base seed (falls back to HARDYLAB_SEED)");
    sub->add_option("--samples", c.samples, "Monte Carlo samples per trial");
    sub->add_option("--trials", c.trials, "trials per sweep");
    sub->add_option("--tol", c.tol, "tolerance");
    sub->add_option("--out", c.out, "output directory");
    sub->add_option("--format", c.formats, "csv, json, svg (comma separated)")->delimiter(',');
    sub->add_flag("--allow-borderline", c.allow_borderline, "admit d = 2s");
    sub->add_option("--config", c.config_file, "JSON config; flags take precedence");
    if (std::string(name) == "verify") {
      sub->add_option("suite", c.suite, "electrostatic | indirect | nn | elementary | screened | ltvu | partition | fdll | sublevel")
          ->required();
    }
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParams;
  }

  CLI::App* sub = nullptr;
  for (auto& [name, s] : subs)
    if (s->parsed()) {
      c.command = name;
      sub = s;
    }

  const auto t0 = std::chrono::steady_clock::now();
  int rc = kExitOk;
  std::vector<fs::path> written;
  std::string error;
  std::size_t violations = 0;
  try {
    if (c.command == "coherent") {
      // one-dimensional defaults; flags and config still override
      if (sub->get_option("--d")->count() == 0 && sub->get_option("--s")->count() == 0) {
        c.d = 1;
        c.s = 0.5;
        c.allow_borderline = true;
      }
      if (sub->get_option("--grid-n")->count() == 0) c.grid_n = 400;
      if (sub->get_option("--r-max")->count() == 0) c.r_max = 10.0;
    }
    if (!c.config_file.empty()) apply_config(c, c.config_file, *sub);
    if (sub->get_option("--seed")->count() == 0) {
      if (const char* env = std::getenv("HARDYLAB_SEED")) {
        try {
          c.seed = std::stoull(env);
          c.seed_from_env = true;
        } catch (const std::exception&) {
          throw ParamError("HARDYLAB_SEED is not an unsigned integer");
        }
      }
    }
    for (const auto& f : c.formats)
      if (f != "csv" && f != "json" && f != "svg") throw ParamError("unsupported format '" + f + "'");

    std::vector<Output> outs;
    if (c.command == "constants") {
      outs = cmd_constants(c, sub->get_option("--d")->count() > 0, sub->get_option("--s")->count() > 0);
    } else if (c.command == "solve-tau") {
      outs = cmd_solve(c, FunctionalKind::tau);
    } else if (c.command == "solve-omega") {
      outs = cmd_solve(c, FunctionalKind::omega);
    } else if (c.command == "slater") {
      outs = cmd_slater(c);
    } else if (c.command == "coherent") {
      outs = cmd_coherent(c);
    } else if (c.command == "verify") {
      outs = cmd_verify(c, violations);
    } else if (c.command == "predict") {
      outs = cmd_predict(c);
    }
    written = emit(c, outs);
    for (const auto& o : outs) std::cout << to_csv(o.table);
    if (violations > 0) {
      rc = kExitViolation;
      error = std::to_string(violations) + " violation(s)";
    }
  } catch (const ParamError& e) {
    rc = kExitParams;
    error = e.what();
  } catch (const NumericalError& e) {
    rc = kExitNumerical;
    error = e.what();
  } catch (const std::exception& e) {
    rc = kExitParams;
    error = e.what();
  }
  if (!error.empty()) std::cerr << "hardylab " << c.command << ": " << error << "\n";

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const ordered_json cfg = c.to_json();
  ordered_json entry;
  entry["command"] = c.command;
  entry["config_hash"] = fnv1a_hex(cfg.dump());
  entry["seed"] = c.seed;
  entry["seed_source"] = sub->get_option("--seed")->count() ? "flag" : (c.seed_from_env ? "env" : "default");
  entry["wall_time_s"] = wall;
  entry["exit_code"] = rc;
  ordered_json outputs = ordered_json::array();
  for (const auto& p : written) outputs.push_back(p.string());
  entry["outputs"] = outputs;
  if (!error.empty()) entry["error"] = error;
  try {
    append_ledger(fs::path(c.out) / "ledger.jsonl", entry);
  } catch (const std::exception& e) {
    std::cerr << "hardylab: " << e.what() << "\n";
    if (rc == kExitOk) rc = kExitParams;
  }
  return rc;
}
