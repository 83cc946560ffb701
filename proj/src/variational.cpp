#include "hardylab/variational.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>

namespace hardylab {

std::string to_string(FunctionalKind k) { return k == FunctionalKind::tau ? "tau" : "omega"; }

namespace {

void require_nonzero(const RadialDensity& rho) {
  if (!(rho.mass() > 0.0)) throw ParamError("objective undefined for the zero density");
}

void require_subcritical(const Params& p) {
  if (p.borderline()) throw ParamError("semiclassical functionals need d > 2s");
}

}  // namespace

double tau_objective(const RadialDensity& rho, const Params& p) {
  require_subcritical(p);
  require_nonzero(rho);
  if (rho.dim() != p.d()) throw ParamError("tau_objective: dimension mismatch");
  const double D = riesz_energy(rho, RieszKernel(p.d(), p.lambda()));
  return rho.lp_integral(p.q()) * std::pow(rho.mass(), 1.0 - 2.0 * p.s() / p.d()) / D;
}

double omega_objective(const RadialDensity& rho, const Params& p) {
  require_subcritical(p);
  require_nonzero(rho);
  if (rho.dim() != p.d()) throw ParamError("omega_objective: dimension mismatch");
  std::vector<double> f(rho.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::sqrt(rho.values()[i]);
  const double T = fractional_kinetic(p.d(), rho.radii(), f, p.s());
  const double D = riesz_energy(rho, RieszKernel(p.d(), p.lambda()));
  return T * rho.mass() / D;
}

SemiclassicalFunctional::SemiclassicalFunctional(FunctionalKind kind, const Params& p,
                                                 const std::vector<double>& radii)
    : kind_(kind),
      p_(p),
      radii_(radii),
      shape_(p.d(), radii, std::vector<double>(radii.size(), 0.0)),
      riesz_(p.d(), radii, p.lambda()) {
  require_subcritical(p);
  if (kind == FunctionalKind::omega) {
    kinetic_ = std::make_unique<RadialKineticOperator>(p.d(), radii, p.s());
  }
}

double SemiclassicalFunctional::value(std::span<const double> rho) const {
  std::vector<double> u(rho.size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::log(rho[i]);
  return std::exp(log_value(u, nullptr));
}

double SemiclassicalFunctional::log_value(std::span<const double> u, std::vector<double>* grad) const {
  const std::size_t n = radii_.size();
  if (u.size() != n) throw ParamError("log_value: size mismatch");
  std::vector<double> rho(n);
  for (std::size_t i = 0; i < n; ++i) rho[i] = std::exp(u[i]);
  const auto& w = shape_.mass_weights();
  double M = 0.0;
  for (std::size_t i = 0; i < n; ++i) M += w[i] * rho[i];
  const std::vector<double> Wr = riesz_.gradient(rho);
  double D = 0.0;
  for (std::size_t i = 0; i < n; ++i) D += 0.5 * rho[i] * Wr[i];
  if (!(M > 0.0) || !(D > 0.0)) throw NumericalError("objective evaluated on a vanishing density");

  double logv = 0.0;
  if (kind_ == FunctionalKind::tau) {
    const RadialDensity cur = shape_.with_values(rho);
    const double q = p_.q();
    const double A = cur.lp_integral(q);
    const double e = 1.0 - 2.0 * p_.s() / p_.d();
    logv = std::log(A) + e * std::log(M) - std::log(D);
    if (grad) {
      const auto dA = cur.lp_gradient(q);
      grad->resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        (*grad)[i] = rho[i] * (dA[i] / A + e * w[i] / M - Wr[i] / D);
      }
    }
  } else {
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = std::exp(0.5 * u[i]);
    const auto dT = kinetic_->gradient(f);  // 2 K f
    double T = 0.0;
    for (std::size_t i = 0; i < n; ++i) T += 0.5 * f[i] * dT[i];
    if (!(T > 0.0)) throw NumericalError("kinetic energy vanished");
    logv = std::log(T) + std::log(M) - std::log(D);
    if (grad) {
      grad->resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        (*grad)[i] = 0.5 * f[i] * dT[i] / T + rho[i] * (w[i] / M - Wr[i] / D);
      }
    }
  }
  return logv;
}

SemiclassicalFunctional::Metric SemiclassicalFunctional::metric(std::span<const double> u) const {
  const std::size_t n = radii_.size();
  const auto& w = shape_.mass_weights();
  Metric m;
  m.diag.resize(n);
  double M = 0.0;
  for (std::size_t i = 0; i < n; ++i) M += w[i] * std::exp(u[i]);
  for (std::size_t i = 0; i < n; ++i) m.diag[i] = w[i] * std::exp(u[i]) / M;
  if (kinetic_) {
    const auto& K = kinetic_->matrix();
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = std::exp(0.5 * u[i]);
    const double T = kinetic_->energy(f);
    for (std::size_t i = 0; i < n; ++i) m.diag[i] += 0.5 * f[i] * f[i] * K(i, i) / T;
    if (p_.s() == 1.0) {
      m.off.resize(n - 1);
      for (std::size_t i = 0; i + 1 < n; ++i) m.off[i] = 0.5 * f[i] * f[i + 1] * K(i, i + 1) / T;
    }
  }
  for (auto& x : m.diag) x = std::max(x, 1e-10);
  return m;
}

void SemiclassicalFunctional::Metric::solve(std::vector<double>& v) const {
  const std::size_t n = diag.size();
  if (off.empty()) {
    for (std::size_t i = 0; i < n; ++i) v[i] /= diag[i];
    return;
  }
  // Thomas algorithm for the symmetric tridiagonal system
  std::vector<double> c(n), b(diag);
  for (std::size_t i = 1; i < n; ++i) {
    const double m = off[i - 1] / b[i - 1];
    b[i] -= m * off[i - 1];
    v[i] -= m * v[i - 1];
  }
  v[n - 1] /= b[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) v[i] = (v[i] - off[i] * v[i + 1]) / b[i];
}

OptimizerResult minimize_functional(const FunctionalSpec& spec, const RadialDensity& init,
                                    const OptimizerOptions& opts) {
  const Params& p = spec.params;
  if (init.dim() != p.d()) throw ParamError("minimize_functional: dimension mismatch");
  if (!(init.mass() > 0.0)) throw ParamError("minimize_functional: initial density is zero");
  SemiclassicalFunctional F(spec.kind, p, init.radii());
  const std::size_t n = init.size();
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = std::log(std::max(init.values()[i], 1e-300));

  std::vector<double> g;
  double f = F.log_value(u, &g);
  OptimizerResult res{spec.kind, std::exp(f), init, 0, 0.0, false, false, {std::exp(f)}};

  struct Pair {
    std::vector<double> s, y;
    double rho;
  };
  std::deque<Pair> mem;
  int quiet = 0;
  std::vector<double> dir(n), q(n), trial(n), gt;

  // Without a metric the log-grid cell sizes, spread over several decades,
  // make the problem badly conditioned.
  SemiclassicalFunctional::Metric metric;
  std::vector<double> tmp(n);

  for (int it = 0; it < opts.max_iterations; ++it) {
    metric = F.metric(u);
    // two-loop recursion
    q = g;
    std::vector<double> alpha(mem.size());
    for (std::size_t k = mem.size(); k-- > 0;) {
      double a = 0.0;
      for (std::size_t i = 0; i < n; ++i) a += mem[k].s[i] * q[i];
      a *= mem[k].rho;
      alpha[k] = a;
      for (std::size_t i = 0; i < n; ++i) q[i] -= a * mem[k].y[i];
    }
    double gamma = 1.0;
    if (!mem.empty()) {
      const auto& last = mem.back();
      double sy = 0.0, yDy = 0.0;
      tmp = last.y;
      metric.solve(tmp);
      for (std::size_t i = 0; i < n; ++i) {
        sy += last.s[i] * last.y[i];
        yDy += last.y[i] * tmp[i];
      }
      if (yDy > 0.0) gamma = sy / yDy;
    }
    metric.solve(q);
    for (std::size_t i = 0; i < n; ++i) q[i] *= gamma;
    for (std::size_t k = 0; k < mem.size(); ++k) {
      double b = 0.0;
      for (std::size_t i = 0; i < n; ++i) b += mem[k].y[i] * q[i];
      b *= mem[k].rho;
      for (std::size_t i = 0; i < n; ++i) q[i] += mem[k].s[i] * (alpha[k] - b);
    }
    double slope = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      dir[i] = -q[i];
      slope += g[i] * dir[i];
    }
    if (!(slope < 0.0)) {
      mem.clear();
      slope = 0.0;
      tmp = g;
      metric.solve(tmp);
      for (std::size_t i = 0; i < n; ++i) {
        dir[i] = -tmp[i];
        slope += g[i] * dir[i];
      }
      if (mem.empty() && !(slope < 0.0)) {
        res.converged = true;
        break;
      }
    }
    double dmax = 0.0;
    for (double x : dir) dmax = std::max(dmax, std::fabs(x));
    double t = std::min(1.0, opts.max_step / dmax);
    if (mem.empty()) t = std::min(t, 0.1 / dmax);

    bool accepted = false;
    double ft = f;
    for (int bt = 0; bt < 60; ++bt) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = u[i] + t * dir[i];
      ft = F.log_value(trial, &gt);
      if (std::isfinite(ft) && ft <= f + 1e-4 * t * slope) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      if (!mem.empty()) {
        mem.clear();
        continue;
      }
      // Steepest descent cannot lower the objective any more: either we sit
      // at a stationary point up to rounding, or the problem is ill-posed.
      res.converged = quiet > 0;
      if (!res.converged) {
        throw NumericalError("line search failed: objective does not decrease along descent direction");
      }
      break;
    }
    Pair pr{std::vector<double>(n), std::vector<double>(n), 0.0};
    double sy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      pr.s[i] = trial[i] - u[i];
      pr.y[i] = gt[i] - g[i];
      sy += pr.s[i] * pr.y[i];
    }
    if (sy > 1e-300) {
      pr.rho = 1.0 / sy;
      mem.push_back(std::move(pr));
      if (static_cast<int>(mem.size()) > opts.memory) mem.pop_front();
    }
    const double old_val = std::exp(f);
    u = trial;
    g = gt;
    f = ft;
    const double new_val = std::exp(f);
    res.history.push_back(new_val);
    res.iterations = it + 1;
    if ((old_val - new_val) / old_val < opts.tol) {
      if (++quiet >= opts.patience) {
        res.converged = true;
        break;
      }
    } else {
      quiet = 0;
    }
  }

  std::vector<double> rho(n);
  for (std::size_t i = 0; i < n; ++i) rho[i] = std::exp(u[i]);
  res.value = std::exp(f);
  res.residual = 0.0;
  for (double x : g) res.residual += std::fabs(x);
  RadialDensity out = init.with_values(rho);
  if (spec.kind == FunctionalKind::tau) {
    res.density = normalize_tau_density(out, p);
    res.normalized = true;
  } else {
    res.density = out.scaled(1.0 / out.mass());
  }
  return res;
}

RadialDensity gaussian_density(int d, std::vector<double> radii, double sigma) {
  const double c = std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.5 * d);
  return RadialDensity::from_function(d, std::move(radii), [&](double r) {
    return c * std::exp(-0.5 * r * r / (sigma * sigma));
  });
}

RadialDensity ball_density(int d, std::vector<double> radii, double R, double floor) {
  return RadialDensity::from_function(d, std::move(radii),
                                      [&](double r) { return r <= R ? 1.0 : floor; });
}

RadialDensity normalize_tau_density(const RadialDensity& rho, const Params& p) {
  const double M = rho.mass();
  const double A = rho.lp_integral(p.q());
  const double c = std::pow(M / A, p.d() / (2.0 * p.s()));
  // rho'(x) = c rho(x / l) with c l^d M = 1
  const double l = std::pow(1.0 / (c * M), 1.0 / p.d());
  std::vector<double> r = rho.radii();
  std::vector<double> v = rho.values();
  for (auto& x : r) x *= l;
  for (auto& x : v) x *= c;
  return {rho.dim(), std::move(r), std::move(v)};
}

double bosonic_upper_bound(int N, double omega_hat) {
  if (N < 2) throw ParamError("bosonic_upper_bound: need N >= 2");
  return omega_hat / (N - 1);
}

}  // namespace hardylab
