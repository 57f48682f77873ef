#include "gaborlab/group.hpp"

#include <string>

namespace gaborlab {

GroupCtx::GroupCtx(int n) : n_(n) {
  if (n < 2) throw DimensionError("group order N must be at least 2, got " + std::to_string(n));
}

int GroupCtx::inv2() const {
  require_odd("inverse of 2 mod N");
  return (n_ + 1) / 2;
}

void GroupCtx::require_odd(std::string_view operation) const {
  if (!is_odd())
    throw ParityError(std::string(operation) + " requires odd N (2 must be invertible mod N), got N=" +
                      std::to_string(n_));
}

PhasePoint make_point(const GroupCtx& ctx, long long x, long long xi) {
  return {ctx.reduce(x), ctx.reduce(xi)};
}

PhasePoint add(const GroupCtx& ctx, PhasePoint a, PhasePoint b) {
  return make_point(ctx, static_cast<long long>(a.x) + b.x, static_cast<long long>(a.xi) + b.xi);
}

PhasePoint subtract(const GroupCtx& ctx, PhasePoint a, PhasePoint b) {
  return make_point(ctx, static_cast<long long>(a.x) - b.x, static_cast<long long>(a.xi) - b.xi);
}

PhasePoint scale(const GroupCtx& ctx, long long k, PhasePoint p) {
  return make_point(ctx, (k % ctx.n()) * p.x, (k % ctx.n()) * p.xi);
}

Signal::Signal(GroupCtx ctx, CVector values) : ctx_(ctx), values_(std::move(values)) {
  if (values_.size() != ctx_.n())
    throw DimensionError("signal length " + std::to_string(values_.size()) + " does not match N=" +
                         std::to_string(ctx_.n()));
  if (!values_.allFinite()) throw DimensionError("signal has non-finite entries");
}

Signal Signal::zeros(GroupCtx ctx) { return Signal(ctx, CVector::Zero(ctx.n())); }

Signal Signal::delta(GroupCtx ctx, int t) {
  CVector v = CVector::Zero(ctx.n());
  v[ctx.reduce(t)] = 1.0;
  return Signal(ctx, std::move(v));
}

void require_same_group(const GroupCtx& a, const GroupCtx& b, std::string_view what) {
  if (!(a == b))
    throw DimensionError(std::string(what) + ": group orders differ (" + std::to_string(a.n()) +
                         " vs " + std::to_string(b.n()) + ")");
}

Complex inner(const Signal& f, const Signal& g) {
  require_same_group(f.ctx(), g.ctx(), "inner product");
  return g.values().dot(f.values());
}

OperatorMatrix::OperatorMatrix(GroupCtx ctx, CMatrix values) : ctx_(ctx), values_(std::move(values)) {
  if (values_.rows() != ctx_.n() || values_.cols() != ctx_.n())
    throw DimensionError("operator matrix must be N x N");
}

OperatorMatrix OperatorMatrix::identity(GroupCtx ctx) {
  return OperatorMatrix(ctx, CMatrix::Identity(ctx.n(), ctx.n()));
}

Signal OperatorMatrix::apply(const Signal& f) const {
  require_same_group(ctx_, f.ctx(), "operator application");
  return Signal(ctx_, values_ * f.values());
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_group(a.ctx_, b.ctx_, "operator composition");
  return OperatorMatrix(a.ctx_, a.values_ * b.values_);
}

}  // namespace gaborlab
