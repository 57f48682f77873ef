#include "gaborlab/symbols.hpp"

#include <cmath>

#include "gaborlab/dft.hpp"

namespace gaborlab {

Symbol gaussian_envelope_symbol(const GroupCtx& ctx, double width, Rng& rng) {
  if (!(width > 0.0)) throw PreconditionError("envelope width must be positive");
  const int n = ctx.n();
  CMatrix spectrum(n, n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const double sp = ctx.signed_rep(p);
      const double sq = ctx.signed_rep(q);
      spectrum(p, q) = rng.complex_normal() * std::exp(-(sp * sp + sq * sq) / (2.0 * width * width));
    }
  }
  CMatrix values = dft::backward2(spectrum);
  values *= static_cast<double>(n) / values.norm();
  return Symbol(ctx, std::move(values));
}

Symbol eps_perturbation_symbol(const GroupCtx& ctx, double eps, double width, Rng& rng) {
  const Symbol s0 = gaussian_envelope_symbol(ctx, width, rng);
  const Calculus calc = ctx.is_odd() ? Calculus::Weyl : Calculus::KohnNirenberg;
  const double norm = operator_norm(quantize(s0, calc).values());
  return Symbol::constant(ctx, 1.0) + Complex(eps / norm) * s0;
}

Symbol random_band_symbol(const GroupCtx& ctx, int band, Rng& rng) {
  if (band < 0) throw PreconditionError("symbol band must be non-negative");
  const int n = ctx.n();
  CMatrix spectrum = CMatrix::Zero(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (std::abs(ctx.signed_rep(p)) <= band && std::abs(ctx.signed_rep(q)) <= band)
        spectrum(p, q) = rng.complex_normal();
  return Symbol(ctx, dft::backward2(spectrum) / static_cast<double>(n));
}

Symbol white_symbol(const GroupCtx& ctx, Rng& rng) {
  return Symbol(ctx, rng.complex_matrix(ctx.n(), ctx.n()));
}

double operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<CMatrix> svd(m);
  return svd.singularValues()[0];
}

}  // namespace gaborlab
