#include <cmath>
#include <complex>
#include <random>

#include "hardylab/manybody.hpp"

namespace hardylab {

namespace {

// One draw from the density F / L^d: uniform on Q_L plus a zeta-distributed shift.
void propose(const SlaterState& st, Rng& rng, std::vector<double>& x) {
  std::uniform_real_distribution<double> unif(-0.5, 0.5);
  const double ell = st.ell();
  const auto& z = st.mollifier();
  for (int a = 0; a < st.dim(); ++a) {
    // zeta_1 is bounded by 2/ell on (-ell/2, ell/2): rejection from uniform
    double t;
    while (true) {
      t = ell * unif(rng);
      const double u = std::uniform_real_distribution<double>(0.0, 2.0 / ell)(rng);
      if (u < z.zeta(t)) break;
    }
    x[a] = st.L() * unif(rng) + t;
  }
}

}  // namespace

std::vector<double> sample_slater_points(const SlaterState& st, Rng& rng) {
  if (std::abs(st.mollifier().mass - 1.0) > 1e-12) {
    throw ParamError("sample_slater_points: the mollifier must be normalized");
  }
  const std::size_t N = st.N();
  const int d = st.dim();
  std::vector<double> pts(N * d);
  std::vector<std::vector<std::complex<double>>> basis;  // orthonormal, spans chosen feature vectors
  std::vector<std::complex<double>> phi, v;
  std::vector<double> x(d);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const std::size_t max_proposals = 100000 * N + 1000;
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t tries = 0;
    while (true) {
      if (++tries > max_proposals) throw NumericalError("sample_slater_points: rejection sampler stalled");
      propose(st, rng, x);
      st.orbitals(x, phi);
      double norm0 = 0.0;
      for (const auto& c : phi) norm0 += std::norm(c);
      if (!(norm0 > 0.0)) continue;
      v = phi;
      // two Gram-Schmidt passes against the chosen directions
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& e : basis) {
          std::complex<double> dot = 0.0;
          for (std::size_t i = 0; i < N; ++i) dot += std::conj(e[i]) * v[i];
          for (std::size_t i = 0; i < N; ++i) v[i] -= dot * e[i];
        }
      }
      double norm1 = 0.0;
      for (const auto& c : v) norm1 += std::norm(c);
      const double ratio = norm1 / norm0;
      if (ratio < 1e-12) continue;  // degenerate direction: resample
      if (unif(rng) >= ratio) continue;
      const double inv = 1.0 / std::sqrt(norm1);
      for (auto& c : v) c *= inv;
      basis.push_back(v);
      for (int a = 0; a < d; ++a) pts[k * d + a] = x[a];
      break;
    }
  }
  return pts;
}

}  // namespace hardylab
