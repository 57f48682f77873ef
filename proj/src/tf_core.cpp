#include "gaborlab/tf_core.hpp"

#include <cmath>
#include <numbers>

#include "gaborlab/dft.hpp"

namespace gaborlab {
namespace {

// exp(2 pi i k / N) for k taken mod N; avoids phase drift for large k.
Complex unit_root(const GroupCtx& ctx, long long k) {
  const double angle = 2.0 * std::numbers::pi * ctx.reduce(k) / ctx.n();
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

Signal tf_shift(const Signal& f, PhasePoint z) {
  const GroupCtx& ctx = f.ctx();
  const int n = ctx.n();
  CVector out(n);
  for (int t = 0; t < n; ++t)
    out[t] = unit_root(ctx, static_cast<long long>(z.xi) * t) * f[static_cast<long long>(t) - z.x];
  return Signal(ctx, std::move(out));
}

PhaseArray stft(const Signal& f, const Signal& g) {
  require_same_group(f.ctx(), g.ctx(), "stft");
  const int n = f.size();
  CMatrix out(n, n);
  CVector u(n);
  for (int x = 0; x < n; ++x) {
    for (int t = 0; t < n; ++t) u[t] = f[t] * std::conj(g[static_cast<long long>(t) - x]);
    out.row(x) = dft::forward(u).transpose();
  }
  return PhaseArray(f.ctx(), std::move(out));
}

PhaseArray cross_wigner(const Signal& f, const Signal& g) {
  require_same_group(f.ctx(), g.ctx(), "cross_wigner");
  const GroupCtx& ctx = f.ctx();
  const long long h = ctx.inv2();
  const int n = ctx.n();
  CMatrix out(n, n);
  CVector u(n);
  for (int x = 0; x < n; ++x) {
    for (int t = 0; t < n; ++t) u[t] = f[x + h * t] * std::conj(g[x - h * t]);
    out.row(x) = dft::forward(u).transpose();
  }
  return PhaseArray(ctx, std::move(out));
}

PhaseArray wigner_via_stft(const Signal& f, const Signal& g) {
  const GroupCtx& ctx = f.ctx();
  ctx.require_odd("wigner_via_stft");
  const PhaseArray v = stft(f, reflect(g));
  const int n = ctx.n();
  CMatrix out(n, n);
  for (int x = 0; x < n; ++x)
    for (int xi = 0; xi < n; ++xi)
      out(x, xi) = unit_root(ctx, 2LL * x * xi) * v(2LL * x, 2LL * xi);
  return PhaseArray(ctx, std::move(out));
}

Signal reflect(const Signal& g) {
  const int n = g.size();
  CVector out(n);
  for (int t = 0; t < n; ++t) out[t] = g[-static_cast<long long>(t)];
  return Signal(g.ctx(), std::move(out));
}

PhasePoint j_map(const GroupCtx& ctx, PhasePoint z) { return make_point(ctx, z.xi, -static_cast<long long>(z.x)); }

PhasePoint j_inverse(const GroupCtx& ctx, PhasePoint z) { return make_point(ctx, -static_cast<long long>(z.xi), z.x); }

}  // namespace gaborlab
