#include "gaborlab/quantize.hpp"

#include <cmath>
#include <numbers>

#include "gaborlab/dft.hpp"

namespace gaborlab {
namespace {

// Kernel entry K(centre(x, y) row, offset t = x - y) is the inverse DFT of
// the symbol row at `centre`. The two calculi differ only in which row
// feeds which kernel diagonal:
//   KN:   row x  -> K(x, x - t)
//   Weyl: row u  -> K(u + h t, u - h t)
OperatorMatrix kernel_from_rows(const Symbol& sigma, long long h_or_zero, bool weyl) {
  const GroupCtx& ctx = sigma.ctx();
  const int n = ctx.n();
  CMatrix kernel(n, n);
  for (int u = 0; u < n; ++u) {
    const CVector row = dft::backward(sigma.values().row(u).transpose()) / static_cast<double>(n);
    for (int t = 0; t < n; ++t) {
      if (weyl)
        kernel(ctx.reduce(u + h_or_zero * t), ctx.reduce(u - h_or_zero * t)) = row[t];
      else
        kernel(u, ctx.reduce(static_cast<long long>(u) - t)) = row[t];
    }
  }
  return OperatorMatrix(ctx, std::move(kernel));
}

}  // namespace

OperatorMatrix kn_quantize(const Symbol& sigma) { return kernel_from_rows(sigma, 0, false); }

OperatorMatrix weyl_quantize(const Symbol& sigma) {
  return kernel_from_rows(sigma, sigma.ctx().inv2(), true);
}

OperatorMatrix quantize(const Symbol& sigma, Calculus calculus) {
  return calculus == Calculus::Weyl ? weyl_quantize(sigma) : kn_quantize(sigma);
}

Symbol dequantize(const OperatorMatrix& op, Calculus calculus) {
  const GroupCtx& ctx = op.ctx();
  const int n = ctx.n();
  const long long h = calculus == Calculus::Weyl ? ctx.inv2() : 0;
  const CMatrix& k = op.values();
  CMatrix sym(n, n);
  CVector diag(n);
  for (int u = 0; u < n; ++u) {
    for (int t = 0; t < n; ++t) {
      diag[t] = calculus == Calculus::Weyl ? k(ctx.reduce(u + h * t), ctx.reduce(u - h * t))
                                           : k(u, ctx.reduce(static_cast<long long>(u) - t));
    }
    sym.row(u) = dft::forward(diag).transpose();
  }
  return Symbol(ctx, std::move(sym));
}

Symbol twisted_product(const Symbol& sigma, const Symbol& tau, Calculus calculus) {
  require_same_group(sigma.ctx(), tau.ctx(), "twisted_product");
  return dequantize(quantize(sigma, calculus) * quantize(tau, calculus), calculus);
}

Symbol kn_from_weyl(const Symbol& sigma) {
  const GroupCtx& ctx = sigma.ctx();
  const long long h = ctx.inv2();
  const int n = ctx.n();
  CMatrix spectrum = dft::forward2(sigma.values());
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const double angle = 2.0 * std::numbers::pi * ctx.reduce(h * ctx.reduce(static_cast<long long>(p) * q)) / n;
      spectrum(p, q) *= Complex(std::cos(angle), std::sin(angle));
    }
  }
  return Symbol(ctx, dft::backward2(spectrum) / static_cast<double>(n) / static_cast<double>(n));
}

}  // namespace gaborlab
