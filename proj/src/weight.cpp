#include "gaborlab/weight.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gaborlab/random.hpp"

namespace gaborlab {
namespace {

constexpr int kSamplePairs = 10000;
constexpr std::uint64_t kSampleSeed = 0x5eed5eedULL;
constexpr double kSlack = 1e-12;

struct IntPoint {
  long long x;
  long long xi;
};

IntPoint random_rep(const GroupCtx& ctx, Rng& rng) {
  return {ctx.signed_rep(rng.below(ctx.n())), ctx.signed_rep(rng.below(ctx.n()))};
}

double moderate_ratio(const GroupCtx& ctx, const Weight& m, const Weight& v, IntPoint w, IntPoint z) {
  const double lhs = m.at(ctx, make_point(ctx, w.x + z.x, w.xi + z.xi));
  return lhs / (v(z.x, z.xi) * m(w.x, w.xi));
}

}  // namespace

Weight Weight::constant() { return Weight(); }

Weight Weight::polynomial(double s) {
  if (!(s >= 0.0) || !std::isfinite(s)) throw PreconditionError("polynomial weight needs s >= 0");
  Weight w;
  w.kind_ = Kind::Polynomial;
  w.s_ = s;
  return w;
}

Weight Weight::subexponential(double a, double b) {
  if (!(a >= 0.0) || !std::isfinite(a)) throw PreconditionError("subexponential weight needs a >= 0");
  // b = 1 is the exponential weight, which violates GRS; only Custom can
  // represent it.
  if (!(b >= 0.0 && b < 1.0)) throw PreconditionError("subexponential weight needs 0 <= b < 1");
  Weight w;
  w.kind_ = Kind::Subexponential;
  w.a_ = a;
  w.b_ = b;
  return w;
}

Weight Weight::custom(GroupCtx ctx, RMatrix table, bool grs) {
  const int n = ctx.n();
  if (table.rows() != n || table.cols() != n) throw DimensionError("custom weight table must be N x N");
  if (!table.allFinite() || (table.array() <= 0.0).any())
    throw PreconditionError("custom weight must be finite and positive");
  if (std::abs(table(0, 0) - 1.0) > kSlack) throw PreconditionError("custom weight must satisfy v(0) = 1");
  for (int x = 0; x < n; ++x) {
    for (int xi = 0; xi < n; ++xi) {
      const double v = table(x, xi);
      if (std::abs(table(ctx.reduce(-x), xi) - v) > kSlack * v ||
          std::abs(table(x, ctx.reduce(-xi)) - v) > kSlack * v)
        throw PreconditionError("custom weight must be even in each coordinate");
    }
  }
  Weight w;
  w.kind_ = Kind::Custom;
  w.grs_ = grs;
  w.ctx_ = ctx;
  w.table_ = std::move(table);
  if (submultiplicativity_defect(w, ctx, kSamplePairs, kSampleSeed) > 1.0 + kSlack)
    throw PreconditionError("custom weight is not submultiplicative on the sampled pairs");
  return w;
}

std::string Weight::id() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Constant:
      os << "const";
      break;
    case Kind::Polynomial:
      os << "poly(s=" << s_ << ")";
      break;
    case Kind::Subexponential:
      os << "subexp(a=" << a_ << ",b=" << b_ << ")";
      break;
    case Kind::Custom:
      os << "custom(N=" << ctx_->n() << ")";
      break;
  }
  for (int i = 0; i < quarter_turns_; ++i) os << "oj^-1";
  return os.str();
}

double Weight::operator()(long long x, long long xi) const {
  for (int i = 0; i < quarter_turns_; ++i) {
    const long long rx = -xi;
    xi = x;
    x = rx;
  }
  const double r = std::hypot(static_cast<double>(x), static_cast<double>(xi));
  switch (kind_) {
    case Kind::Constant:
      return 1.0;
    case Kind::Polynomial:
      return std::pow(1.0 + r, s_);
    case Kind::Subexponential:
      return std::exp(a_ * std::pow(r, b_));
    case Kind::Custom:
      return table_(ctx_->reduce(x), ctx_->reduce(xi));
  }
  return 1.0;
}

double Weight::at(const GroupCtx& ctx, PhasePoint z) const {
  return (*this)(ctx.signed_rep(z.x), ctx.signed_rep(z.xi));
}

Weight Weight::rotated() const {
  Weight w = *this;
  w.quarter_turns_ = (w.quarter_turns_ + 1) % 4;
  return w;
}

double submultiplicativity_defect(const Weight& v, const GroupCtx& ctx, int pairs, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < pairs; ++i) {
    const IntPoint w = random_rep(ctx, rng);
    const IntPoint z = random_rep(ctx, rng);
    const double lhs =
        v.kind() == Weight::Kind::Custom ? v.at(ctx, make_point(ctx, w.x + z.x, w.xi + z.xi)) : v(w.x + z.x, w.xi + z.xi);
    worst = std::max(worst, lhs / (v(w.x, w.xi) * v(z.x, z.xi)));
  }
  return worst;
}

ModerateWeight::ModerateWeight(GroupCtx ctx, Weight m, Weight base, double constant)
    : ctx_(ctx), m_(std::move(m)), base_(std::move(base)), constant_(constant) {
  if (!(constant > 0.0) || !std::isfinite(constant))
    throw PreconditionError("moderateness constant must be positive and finite");
  Rng rng(kSampleSeed);
  for (int i = 0; i < kSamplePairs; ++i) {
    const IntPoint w = random_rep(ctx_, rng);
    const IntPoint z = random_rep(ctx_, rng);
    if (moderate_ratio(ctx_, m_, base_, w, z) > constant_ * (1.0 + kSlack))
      throw PreconditionError("weight " + m_.id() + " is not moderate with constant " + std::to_string(constant_) +
                              " with respect to " + base_.id());
  }
}

ModerateWeight ModerateWeight::calibrated(GroupCtx ctx, Weight m, Weight base) {
  using K = Weight::Kind;
  const bool analytic =
      m.kind() == K::Constant ||
      (m.kind() == K::Polynomial && base.kind() == K::Polynomial && m.exponent() <= base.exponent()) ||
      (m.kind() == K::Subexponential && base.kind() == K::Subexponential && m.power() == base.power() &&
       m.rate() <= base.rate());
  if (analytic) return ModerateWeight(ctx, std::move(m), std::move(base), 1.0);

  const int n = ctx.n();
  double worst = 0.0;
  if (n <= 32) {
    for (long long wx = -n / 2; wx < n - n / 2; ++wx)
      for (long long wxi = -n / 2; wxi < n - n / 2; ++wxi)
        for (long long zx = -n / 2; zx < n - n / 2; ++zx)
          for (long long zxi = -n / 2; zxi < n - n / 2; ++zxi)
            worst = std::max(worst, moderate_ratio(ctx, m, base, {wx, wxi}, {zx, zxi}));
  } else {
    Rng rng(kSampleSeed);
    for (int i = 0; i < kSamplePairs; ++i) {
      const IntPoint w = random_rep(ctx, rng);
      const IntPoint z = random_rep(ctx, rng);
      worst = std::max(worst, moderate_ratio(ctx, m, base, w, z));
    }
  }
  return ModerateWeight(ctx, std::move(m), std::move(base), std::max(worst, 1e-300));
}

ModerateWeight ModerateWeight::unweighted(GroupCtx ctx, Weight base) {
  return ModerateWeight(ctx, Weight::constant(), std::move(base), 1.0);
}

}  // namespace gaborlab
