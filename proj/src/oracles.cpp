#include "gaborlab/oracles.hpp"

#include <cmath>
#include <numbers>

namespace gaborlab::oracles {
namespace {

Complex phase(long long k, int n) {
  const long long r = ((k % n) + n) % n;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / n;
  return {std::cos(angle), std::sin(angle)};
}

int wrap(long long v, int n) { return static_cast<int>(((v % n) + n) % n); }

CVector shifted(const CVector& g, long long x, long long xi) {
  const int n = static_cast<int>(g.size());
  CVector out(n);
  for (int t = 0; t < n; ++t) out[t] = phase(xi * t, n) * g[wrap(t - x, n)];
  return out;
}

}  // namespace

PhaseArray stft_naive(const Signal& f, const Signal& g) {
  const int n = f.size();
  CMatrix out(n, n);
  for (int x = 0; x < n; ++x)
    for (int xi = 0; xi < n; ++xi) {
      Complex acc = 0.0;
      for (int t = 0; t < n; ++t)
        acc += f.values()[t] * std::conj(g.values()[wrap(t - x, n)]) * phase(-static_cast<long long>(xi) * t, n);
      out(x, xi) = acc;
    }
  return PhaseArray(f.ctx(), std::move(out));
}

PhaseArray cross_wigner_naive(const Signal& f, const Signal& g) {
  const int n = f.size();
  const long long h = (n + 1) / 2;
  CMatrix out(n, n);
  for (int x = 0; x < n; ++x)
    for (int xi = 0; xi < n; ++xi) {
      Complex acc = 0.0;
      for (int t = 0; t < n; ++t)
        acc += f.values()[wrap(x + h * t, n)] * std::conj(g.values()[wrap(x - h * t, n)]) *
               phase(-static_cast<long long>(xi) * t, n);
      out(x, xi) = acc;
    }
  return PhaseArray(f.ctx(), std::move(out));
}

CMatrix weyl_kernel_naive(const Symbol& sigma) {
  const int n = sigma.ctx().n();
  const long long h = (n + 1) / 2;
  CMatrix k(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Complex acc = 0.0;
      for (int xi = 0; xi < n; ++xi)
        acc += sigma.values()(wrap(h * (x + y), n), xi) * phase(static_cast<long long>(x - y) * xi, n);
      k(x, y) = acc / static_cast<double>(n);
    }
  return k;
}

CMatrix kn_kernel_naive(const Symbol& sigma) {
  const int n = sigma.ctx().n();
  CMatrix k(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Complex acc = 0.0;
      for (int xi = 0; xi < n; ++xi) acc += sigma.values()(x, xi) * phase(static_cast<long long>(x - y) * xi, n);
      k(x, y) = acc / static_cast<double>(n);
    }
  return k;
}

CMatrix frame_operator_naive(const Signal& g, int a, int b) {
  const int n = g.size();
  CMatrix s = CMatrix::Zero(n, n);
  for (int x = 0; x < n; x += a)
    for (int xi = 0; xi < n; xi += b) {
      const CVector atom = shifted(g.values(), x, xi);
      s += atom * atom.adjoint();
    }
  return s;
}

CMatrix gabor_matrix_naive(const CMatrix& op, const Signal& g, const Lattice& lattice) {
  const int k = lattice.size();
  CMatrix m(k, k);
  for (int col = 0; col < k; ++col) {
    const PhasePoint mu = lattice.point(col);
    const CVector image = op * shifted(g.values(), mu.x, mu.xi);
    for (int row = 0; row < k; ++row) {
      const PhasePoint lambda = lattice.point(row);
      m(row, col) = shifted(g.values(), lambda.x, lambda.xi).dot(image);
    }
  }
  return m;
}

RVector decay_profile_naive(const CMatrix& m, const Lattice& lattice) {
  const int k = lattice.size();
  RVector h = RVector::Zero(k);
  for (int mu = 0; mu < k; ++mu) {
    const auto [km, lm] = lattice.coords(mu);
    for (int lambda = 0; lambda < k; ++lambda) {
      const auto [kl, ll] = lattice.coords(lambda);
      const int nu = lattice.index(kl - km, ll - lm);
      h[mu] = std::max(h[mu], std::abs(m(lambda, nu)));
    }
  }
  return h;
}

CMatrix neumann_inverse(const CMatrix& x, int order) {
  const Eigen::Index n = x.rows();
  CMatrix term = CMatrix::Identity(n, n);
  CMatrix acc = term;
  for (int k = 1; k <= order; ++k) {
    term = (-x * term).eval();
    acc += term;
  }
  return acc;
}

}  // namespace gaborlab::oracles
