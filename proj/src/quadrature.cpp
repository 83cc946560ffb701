#include "hardylab/quadrature.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>

#include "hardylab/core.hpp"

namespace hardylab {

const Rule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, Rule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw ParamError("gauss_legendre: n must be >= 1");
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it2 = 0; it2 < 100; ++it2) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::fabs(dz) < 1e-16) break;
    }
    // recompute derivative at the converged root
    double p0 = 1.0;
    double p1 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    r.x[i] = -z;
    r.x[n - 1 - i] = z;
    r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return cache.emplace(n, std::move(r)).first->second;
}

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double fsum = f(c - dx) + f(c + dx);
    kron += kWgk[j] * fsum;
    if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
  }
  kron *= h;
  gauss *= h;
  return {a, b, kron, std::fabs(kron - gauss)};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              const QuadOptions& opts, std::span<const double> breakpoints) {
  QuadResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  std::vector<double> pts{a};
  for (double p : breakpoints) {
    if (p > std::min(a, b) && p < std::max(a, b)) pts.push_back(p);
  }
  pts.push_back(b);
  std::priority_queue<Segment> heap;
  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Segment s = gk15(f, pts[i], pts[i + 1]);
    value += s.value;
    error += s.error;
    heap.push(s);
  }
  int count = static_cast<int>(heap.size());
  while (error > std::max(opts.abs_tol, opts.rel_tol * std::fabs(value)) &&
         count < opts.max_intervals) {
    Segment worst = heap.top();
    heap.pop();
    const double m = 0.5 * (worst.a + worst.b);
    if (m == worst.a || m == worst.b) {
      // interval cannot be split further; keep it and stop refining
      heap.push(worst);
      break;
    }
    Segment l = gk15(f, worst.a, m);
    Segment r = gk15(f, m, worst.b);
    value += l.value + r.value - worst.value;
    error += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
    ++count;
  }
  // re-sum from scratch to avoid drift from the running updates
  std::vector<double> vals;
  double err = 0.0;
  vals.reserve(heap.size());
  while (!heap.empty()) {
    vals.push_back(heap.top().value);
    err += heap.top().error;
    heap.pop();
  }
  res.value = pairwise_sum(vals);
  res.error = err;
  res.intervals = count;
  res.converged = err <= std::max(opts.abs_tol, opts.rel_tol * std::fabs(res.value));
  return res;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opts, std::span<const double> breakpoints) {
  QuadResult r = integrate_adaptive(f, a, b, opts, breakpoints);
  if (!r.converged || !std::isfinite(r.value)) {
    throw NumericalError("adaptive quadrature did not converge on [" + std::to_string(a) + ", " +
                         std::to_string(b) + "], error estimate " + std::to_string(r.error));
  }
  return r.value;
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

std::vector<double> geometric_breakpoints(double a, double b, double ratio, int count) {
  std::vector<double> out;
  double f = 1.0;
  for (int k = 0; k < count; ++k) {
    f *= ratio;
    out.push_back(a + (b - a) * f);
  }
  return out;
}

}  // namespace hardylab
