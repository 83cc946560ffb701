#include "hardylab/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hardylab/kinetic.hpp"
#include "hardylab/quadrature.hpp"
#include "hardylab/special.hpp"

namespace hardylab {

namespace {

constexpr double kPi = std::numbers::pi;

// Fourier kernel of the ball {|eta| < k} sampled at lattice offset m, times h^d.
double band_kernel(int d, double k, double h, double m2) {
  if (d == 1) {
    if (m2 == 0.0) return k * h / kPi;
    const double m = std::sqrt(m2);
    return std::sin(k * h * m) / (kPi * m);
  }
  if (m2 == 0.0) return h * h * k * k / (4.0 * kPi);
  const double r = h * std::sqrt(m2);
  return h * h * k * bessel_j1(k * r) / (2.0 * kPi * r);
}

}  // namespace

double coherent_profile(int d, double ell, double r2) {
  return std::pow(kPi * ell * ell, -0.25 * d) * std::exp(-0.5 * r2 / (ell * ell));
}

CoherentGamma coherent_gamma(const CartesianDensity& rho, double g_scale, const Params& p, double tol) {
  const int d = rho.dim();
  if (d != p.d()) throw ParamError("coherent_gamma: dimension mismatch");
  if (d > 2) throw ParamError("coherent_gamma: grids are limited to d = 1 or 2");
  if (!(g_scale > 0.0)) throw ParamError("coherent_gamma: g_scale must be positive");
  const double s = p.s();
  const std::size_t n = rho.cells_per_axis();
  const double h = rho.spacing();
  const std::size_t total = rho.values().size();
  const double omega = unit_ball_volume(d);
  const double c = std::pow(2.0 * kPi, 2.0 * s) * std::pow(omega, -2.0 * s / d);
  const double kfac = std::pow(c, 0.5 / s);  // k = kfac rho^{1/d}

  double rho_max = 0.0;
  for (double v : rho.values()) rho_max = std::max(rho_max, v);
  if (kfac * std::pow(rho_max, 1.0 / d) * h >= kPi) {
    throw ParamError("coherent_gamma: grid too coarse for the local Fermi momentum (need k h < pi)");
  }

  // y-quadrature: Gauss points inside each cell, where rho is constant
  const int m = (d == 1) ? 4 : 2;
  const Rule& gl = gauss_legendre(m);
  const double reach = 9.0 * g_scale;
  const long win = long(std::ceil(reach / h)) + 1;

  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(long(total), long(total));
  std::vector<long> ci(d);
  std::vector<double> gy;
  std::vector<std::size_t> idx;
  std::vector<double> y(d);
  for (std::size_t cell = 0; cell < total; ++cell) {
    const double rv = rho.values()[cell];
    if (rv <= 0.0) continue;
    const double k = kfac * std::pow(rv, 1.0 / d);
    std::size_t rem = cell;
    for (int a = d - 1; a >= 0; --a) {
      ci[a] = long(rem % n);
      rem /= n;
    }
    // grid points within reach of this cell
    idx.clear();
    std::vector<long> lo(d), hi(d);
    for (int a = 0; a < d; ++a) {
      lo[a] = std::max(0L, ci[a] - win);
      hi[a] = std::min(long(n) - 1, ci[a] + win);
    }
    if (d == 1) {
      for (long i = lo[0]; i <= hi[0]; ++i) idx.push_back(std::size_t(i));
    } else {
      for (long i = lo[0]; i <= hi[0]; ++i)
        for (long j = lo[1]; j <= hi[1]; ++j) idx.push_back(std::size_t(i) * n + std::size_t(j));
    }
    const std::size_t w = idx.size();
    // kernel between grid points depends on the index offset
    std::vector<double> P(w * w);
    for (std::size_t a = 0; a < w; ++a) {
      for (std::size_t b = 0; b < w; ++b) {
        double m2 = 0.0;
        std::size_t ia = idx[a], ib = idx[b];
        for (int ax = d - 1; ax >= 0; --ax) {
          const double dm = double(long(ia % n) - long(ib % n));
          m2 += dm * dm;
          ia /= n;
          ib /= n;
        }
        P[a * w + b] = band_kernel(d, k, h, m2);
      }
    }
    // sum over Gauss points y of w_y g(y - x_a) g(y - x_b)
    std::vector<double> acc(w * w, 0.0);
    const int nq = (d == 1) ? m : m * m;
    gy.resize(w);
    for (int q = 0; q < nq; ++q) {
      double wy = 1.0;
      int qq = q;
      for (int a = d - 1; a >= 0; --a) {
        const int g = qq % m;
        qq /= m;
        y[a] = rho.origin() + h * (double(ci[a]) + 0.5 + 0.5 * gl.x[g]);
        wy *= 0.5 * h * gl.w[g];
      }
      for (std::size_t a = 0; a < w; ++a) {
        std::size_t r2i = idx[a];
        double r2 = 0.0;
        for (int ax = d - 1; ax >= 0; --ax) {
          const double x = rho.origin() + h * (double(r2i % n) + 0.5);
          r2i /= n;
          r2 += (y[ax] - x) * (y[ax] - x);
        }
        gy[a] = coherent_profile(d, g_scale, r2);
      }
      for (std::size_t a = 0; a < w; ++a) {
        const double ga = wy * gy[a];
        for (std::size_t b = 0; b < w; ++b) acc[a * w + b] += ga * gy[b];
      }
    }
    for (std::size_t a = 0; a < w; ++a) {
      for (std::size_t b = 0; b < w; ++b) G(long(idx[a]), long(idx[b])) += acc[a * w + b] * P[a * w + b];
    }
  }
  G = 0.5 * (G + G.transpose()).eval();

  CoherentGamma out{p, g_scale, c, rho, G, {}, {}};
  auto& dg = out.diagnostics;
  const double cell = rho.cell_volume();
  out.density.resize(total);
  for (std::size_t i = 0; i < total; ++i) out.density[i] = G(long(i), long(i)) / cell;
  dg.trace = G.trace();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(G);
  if (eig.info() != Eigen::Success) throw NumericalError("coherent_gamma: eigensolver failed");
  dg.min_eigenvalue = eig.eigenvalues().minCoeff();
  dg.max_eigenvalue = eig.eigenvalues().maxCoeff();
  if (dg.min_eigenvalue < -tol || dg.max_eigenvalue > 1.0 + tol) {
    throw NumericalError("coherent_gamma: spectrum leaves [0, 1]; refine the grid");
  }

  // reference rho * |g|^2 with the cell integrals of |g|^2 in closed form
  std::vector<double> smeared(total, 0.0);
  {
    const double inv = 1.0 / g_scale;
    std::vector<double> x(d);
    for (std::size_t i = 0; i < total; ++i) {
      std::size_t rem = i;
      for (int a = d - 1; a >= 0; --a) {
        x[a] = rho.origin() + h * (double(rem % n) + 0.5);
        rem /= n;
      }
      double acc = 0.0;
      for (std::size_t cl = 0; cl < total; ++cl) {
        const double rv = rho.values()[cl];
        if (rv <= 0.0) continue;
        double f = rv;
        std::size_t r2 = cl;
        for (int a = d - 1; a >= 0; --a) {
          const double lo = rho.origin() + h * double(r2 % n);
          r2 /= n;
          f *= 0.5 * (std::erf((lo + h - x[a]) * inv) - std::erf((lo - x[a]) * inv));
        }
        acc += f;
      }
      smeared[i] = acc;
    }
  }
  std::vector<double> diff(total), sm_q(total), rho_q(total);
  const double q = p.q();
  for (std::size_t i = 0; i < total; ++i) {
    diff[i] = std::abs(out.density[i] - smeared[i]);
    sm_q[i] = std::pow(smeared[i], q);
    rho_q[i] = std::pow(rho.values()[i], q);
  }
  dg.density_l1_error = cell * pairwise_sum(diff);
  dg.smeared_lp = cell * pairwise_sum(sm_q);
  dg.rho_lp = cell * pairwise_sum(rho_q);

  std::vector<double> terms;
  std::vector<double> f(total);
  const double norm = std::pow(h, -0.5 * d);
  for (long k = 0; k < long(total); ++k) {
    const double lam = eig.eigenvalues()(k);
    if (std::abs(lam) < 1e-13) continue;
    for (std::size_t i = 0; i < total; ++i) f[i] = eig.eigenvectors()(long(i), k) * norm;
    terms.push_back(lam * fractional_kinetic_cartesian(d, n, h, f, s));
  }
  dg.kinetic = pairwise_sum(terms);
  const double N = rho.mass();
  dg.g_kinetic = N * std::pow(g_scale, -2.0 * s) * gamma(0.5 * d + s) / gamma(0.5 * d);
  const double ctf = semiclassical_constant(d, s);
  dg.slack_smeared = ctf * dg.smeared_lp + dg.g_kinetic - dg.kinetic;
  dg.slack_unsmeared = ctf * dg.rho_lp + dg.g_kinetic - dg.kinetic;
  return out;
}

}  // namespace hardylab
