#include "gaborlab/gabor.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "gaborlab/dft.hpp"
#include "gaborlab/tf_core.hpp"

namespace gaborlab {
namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

Lattice::Lattice(GroupCtx ctx, int a, int b) : ctx_(ctx), a_(a), b_(b) {
  const int n = ctx_.n();
  if (a <= 0 || n % a != 0)
    throw LatticeError("time step a=" + std::to_string(a) + " must be a positive divisor of N=" +
                       std::to_string(n));
  if (b <= 0 || n % b != 0)
    throw LatticeError("frequency step b=" + std::to_string(b) + " must be a positive divisor of N=" +
                       std::to_string(n));
}

int Lattice::index(long long k, long long l) const {
  const long long nk = time_count();
  const long long nl = freq_count();
  k %= nk;
  l %= nl;
  if (k < 0) k += nk;
  if (l < 0) l += nl;
  return static_cast<int>(l * nk + k);
}

std::pair<int, int> Lattice::coords(int index) const {
  return {index % time_count(), index / time_count()};
}

PhasePoint Lattice::point(int index) const {
  const auto [k, l] = coords(index);
  return make_point(ctx_, static_cast<long long>(k) * a_, static_cast<long long>(l) * b_);
}

int Lattice::difference(int i, int j) const {
  const auto [ki, li] = coords(i);
  const auto [kj, lj] = coords(j);
  return index(ki - kj, li - lj);
}

int Lattice::sum(int i, int j) const {
  const auto [ki, li] = coords(i);
  const auto [kj, lj] = coords(j);
  return index(ki + kj, li + lj);
}

CoeffArray::CoeffArray(Lattice lattice, CVector values) : lattice_(lattice), values_(std::move(values)) {
  if (values_.size() != lattice_.size())
    throw DimensionError("coefficient array length " + std::to_string(values_.size()) +
                         " does not match lattice size " + std::to_string(lattice_.size()));
}

CoeffArray CoeffArray::zeros(const Lattice& lattice) { return CoeffArray(lattice, CVector::Zero(lattice.size())); }

CoeffArray CoeffArray::delta(const Lattice& lattice, int index) {
  CVector v = CVector::Zero(lattice.size());
  v[index] = 1.0;
  return CoeffArray(lattice, std::move(v));
}

GaborSystem::GaborSystem(Lattice lattice, Signal g, Signal gamma, Signal tight, CMatrix frame_operator,
                         FrameBounds bounds)
    : lattice_(lattice),
      g_(std::move(g)),
      gamma_(std::move(gamma)),
      tight_(std::move(tight)),
      frame_operator_(std::move(frame_operator)),
      bounds_(bounds) {}

const Signal& GaborSystem::window(Window w) const noexcept {
  switch (w) {
    case Window::Dual:
      return gamma_;
    case Window::Tight:
      return tight_;
    case Window::Primary:
      break;
  }
  return g_;
}

CMatrix GaborSystem::atoms(Window w) const {
  const Signal& win = window(w);
  CMatrix out(ctx().n(), lattice_.size());
  for (int i = 0; i < lattice_.size(); ++i) out.col(i) = tf_shift(win, lattice_.point(i)).values();
  return out;
}

GaborSystem build_system(const Signal& g, int a, int b, double rel_tol) {
  const GroupCtx& ctx = g.ctx();
  Lattice lattice(ctx, a, b);
  if (g.norm() == 0.0) throw PreconditionError("window must be non-zero");
  if (static_cast<long long>(a) * b > ctx.n())
    throw NotAFrameError("a*b=" + std::to_string(a * b) + " exceeds N=" + std::to_string(ctx.n()) +
                         ": " + std::to_string(lattice.size()) + " atoms cannot span C^N");

  CMatrix atoms(ctx.n(), lattice.size());
  for (int i = 0; i < lattice.size(); ++i) atoms.col(i) = tf_shift(g, lattice.point(i)).values();
  CMatrix s = atoms * atoms.adjoint();
  s = 0.5 * (s + s.adjoint()).eval();

  Eigen::SelfAdjointEigenSolver<CMatrix> eig(s);
  const RVector& lambda = eig.eigenvalues();
  const FrameBounds bounds{lambda.minCoeff(), lambda.maxCoeff()};
  if (!(bounds.lower > rel_tol * bounds.upper))
    throw NotAFrameError("frame operator is singular: eigenvalues in [" + sci(bounds.lower) + ", " +
                         sci(bounds.upper) + "], ratio below " + sci(rel_tol));

  const CMatrix& v = eig.eigenvectors();
  const CVector coeffs = v.adjoint() * g.values();
  CVector gamma = v * (coeffs.array() / lambda.array().cast<Complex>()).matrix();
  CVector tight = v * (coeffs.array() / lambda.array().sqrt().cast<Complex>()).matrix();
  return GaborSystem(lattice, g, Signal(ctx, std::move(gamma)), Signal(ctx, std::move(tight)), std::move(s),
                     bounds);
}

Signal periodized_gaussian(const GroupCtx& ctx, int terms) {
  const int n = ctx.n();
  CVector g(n);
  for (int t = 0; t < n; ++t) {
    double acc = 0.0;
    // Small terms first.
    for (int k = terms; k >= 1; --k) {
      const double up = t + static_cast<double>(k) * n;
      const double down = t - static_cast<double>(k) * n;
      acc += std::exp(-std::numbers::pi * up * up / n) + std::exp(-std::numbers::pi * down * down / n);
    }
    acc += std::exp(-std::numbers::pi * static_cast<double>(t) * t / n);
    g[t] = acc;
  }
  g /= g.norm();
  return Signal(ctx, std::move(g));
}

CoeffArray analyze(const GaborSystem& sys, const Signal& f, Window w) {
  require_same_group(sys.ctx(), f.ctx(), "analyze");
  const Lattice& lat = sys.lattice();
  const Signal& win = sys.window(w);
  const int n = sys.ctx().n();
  const int period = lat.freq_count();  // N / b
  CVector out(lat.size());
  CVector folded(period);
  for (int k = 0; k < lat.time_count(); ++k) {
    const long long shift = static_cast<long long>(k) * lat.a();
    folded.setZero();
    // Sampling the length-N DFT at multiples of b equals a length-N/b DFT of
    // the periodically folded product.
    for (int t = 0; t < n; ++t) folded[t % period] += f[t] * std::conj(win[t - shift]);
    const CVector spectrum = dft::forward(folded);
    for (int l = 0; l < period; ++l) out[lat.index(k, l)] = spectrum[l];
  }
  return CoeffArray(lat, std::move(out));
}

Signal synthesize(const GaborSystem& sys, const CoeffArray& c, Window w) {
  const Lattice& lat = sys.lattice();
  if (!(c.lattice() == lat)) throw DimensionError("synthesize: coefficient lattice differs from system lattice");
  const Signal& win = sys.window(w);
  const int n = sys.ctx().n();
  const int period = lat.freq_count();
  CVector out = CVector::Zero(n);
  CVector row(period);
  for (int k = 0; k < lat.time_count(); ++k) {
    const long long shift = static_cast<long long>(k) * lat.a();
    for (int l = 0; l < period; ++l) row[l] = c.values()[lat.index(k, l)];
    const CVector modulated = dft::backward(row);
    for (int t = 0; t < n; ++t) out[t] += modulated[t % period] * win[t - shift];
  }
  return Signal(sys.ctx(), std::move(out));
}

}  // namespace gaborlab
