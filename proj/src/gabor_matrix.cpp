#include "gaborlab/gabor_matrix.hpp"

#include <algorithm>
#include <string>

#include "gaborlab/dft.hpp"
#include "gaborlab/tf_core.hpp"

namespace gaborlab {

GaborMatrix::GaborMatrix(Lattice lattice, CMatrix values) : lattice_(lattice), values_(std::move(values)) {
  if (values_.rows() != lattice_.size() || values_.cols() != lattice_.size())
    throw DimensionError("Gabor matrix must be K x K with K=" + std::to_string(lattice_.size()));
}

GaborMatrix GaborMatrix::identity(const Lattice& lattice) {
  return GaborMatrix(lattice, CMatrix::Identity(lattice.size(), lattice.size()));
}

GaborMatrix GaborMatrix::lattice_shift(const Lattice& lattice, int shift_index) {
  CMatrix m = CMatrix::Zero(lattice.size(), lattice.size());
  for (int i = 0; i < lattice.size(); ++i) m(i, lattice.difference(i, shift_index)) = 1.0;
  return GaborMatrix(lattice, std::move(m));
}

CoeffArray GaborMatrix::apply(const CoeffArray& c) const {
  if (!(c.lattice() == lattice_)) throw DimensionError("Gabor matrix applied to coefficients on another lattice");
  return CoeffArray(lattice_, values_ * c.values());
}

GaborMatrix operator*(const GaborMatrix& a, const GaborMatrix& b) {
  if (!(a.lattice_ == b.lattice_)) throw DimensionError("Gabor matrix product over different lattices");
  return GaborMatrix(a.lattice_, a.values_ * b.values_);
}

DecayProfile::DecayProfile(Lattice lattice, RVector values) : lattice_(lattice), values_(std::move(values)) {
  if (values_.size() != lattice_.size()) throw DimensionError("decay profile length must equal lattice size");
  if ((values_.array() < 0.0).any()) throw PreconditionError("decay profile must be non-negative");
}

SymbolSTFT::SymbolSTFT(GroupCtx ctx, std::vector<Complex> values) : ctx_(ctx), values_(std::move(values)) {
  const std::size_t n = static_cast<std::size_t>(ctx_.n());
  if (values_.size() != n * n * n * n) throw DimensionError("symbol STFT must have N^4 entries");
}

Complex SymbolSTFT::operator()(PhasePoint z, PhasePoint zeta) const {
  const std::size_t n = static_cast<std::size_t>(ctx_.n());
  const PhasePoint zr = make_point(ctx_, z.x, z.xi);
  const PhasePoint cr = make_point(ctx_, zeta.x, zeta.xi);
  return values_[((static_cast<std::size_t>(zr.x) * n + zr.xi) * n + cr.x) * n + cr.xi];
}

GaborMatrix gabor_matrix(const OperatorMatrix& op, const GaborSystem& sys, Window w) {
  require_same_group(op.ctx(), sys.ctx(), "gabor_matrix");
  const CMatrix atoms = sys.atoms(w);
  return GaborMatrix(sys.lattice(), atoms.adjoint() * (op.values() * atoms));
}

double diagram_check(const OperatorMatrix& op, const GaborSystem& sys, const Signal& f) {
  const CoeffArray lhs = analyze(sys, op.apply(f), Window::Primary);
  const CoeffArray rhs = gabor_matrix(op, sys).apply(analyze(sys, f, Window::Dual));
  const double diff = (lhs.values() - rhs.values()).norm();
  const double scale = lhs.values().norm();
  return scale > 0.0 ? diff / scale : diff;
}

DecayProfile decay_profile(const GaborMatrix& m) {
  const Lattice& lat = m.lattice();
  const int k = lat.size();
  RVector h = RVector::Zero(k);
  const CMatrix& a = m.values();
  for (int col = 0; col < k; ++col)
    for (int row = 0; row < k; ++row) {
      const int mu = lat.difference(row, col);
      h[mu] = std::max(h[mu], std::abs(a(row, col)));
    }
  return DecayProfile(lat, std::move(h));
}

double cv_norm(const DecayProfile& h, const Weight& v) {
  const Lattice& lat = h.lattice();
  double acc = 0.0;
  for (int mu = 0; mu < lat.size(); ++mu) acc += h[mu] * v.at(lat.ctx(), lat.point(mu));
  return acc;
}

double cv_norm(const GaborMatrix& m, const Weight& v) { return cv_norm(decay_profile(m), v); }

SymbolSTFT symbol_stft(const Symbol& sigma, const Signal& g) {
  const GroupCtx& ctx = sigma.ctx();
  require_same_group(ctx, g.ctx(), "symbol_stft");
  ctx.require_odd("symbol_stft");
  const int n = ctx.n();
  if (n > SymbolSTFT::kMaxN)
    throw SizeLimitError("symbol_stft stores N^4 entries and is limited to N <= " +
                         std::to_string(SymbolSTFT::kMaxN) + ", got N=" + std::to_string(n));
  const PhaseArray phi = cross_wigner(g, g);
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  std::vector<Complex> out(nn * nn);
  CMatrix windowed(n, n);
  for (int z1 = 0; z1 < n; ++z1) {
    for (int z2 = 0; z2 < n; ++z2) {
      for (int t1 = 0; t1 < n; ++t1)
        for (int t2 = 0; t2 < n; ++t2)
          windowed(t1, t2) = sigma.values()(t1, t2) * std::conj(phi(t1 - z1, t2 - z2));
      const CMatrix spectrum = dft::forward2(windowed);
      const std::size_t base = (static_cast<std::size_t>(z1) * n + z2) * nn;
      for (int c1 = 0; c1 < n; ++c1)
        for (int c2 = 0; c2 < n; ++c2) out[base + static_cast<std::size_t>(c1) * n + c2] = spectrum(c1, c2);
    }
  }
  return SymbolSTFT(ctx, std::move(out));
}

double sjostrand_norm(const SymbolSTFT& v_sigma, const Weight& v) {
  const GroupCtx& ctx = v_sigma.ctx();
  const int n = ctx.n();
  double acc = 0.0;
  for (int c1 = 0; c1 < n; ++c1) {
    for (int c2 = 0; c2 < n; ++c2) {
      double envelope = 0.0;
      for (int z1 = 0; z1 < n; ++z1)
        for (int z2 = 0; z2 < n; ++z2) envelope = std::max(envelope, std::abs(v_sigma({z1, z2}, {c1, c2})));
      acc += envelope * v.at(ctx, {c1, c2});
    }
  }
  return acc;
}

double sjostrand_norm(const Symbol& sigma, const Signal& g, const Weight& v) {
  return sjostrand_norm(symbol_stft(sigma, g), v);
}

}  // namespace gaborlab
