#pragma once

// Basic objects on the cyclic group Z_N: the group context, phase-space
// points, signals, N x N phase-space fields and operator matrices.

#include <complex>
#include <string_view>

#include <Eigen/Dense>

#include "gaborlab/errors.hpp"

namespace gaborlab {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

class GroupCtx {
 public:
  explicit GroupCtx(int n);

  int n() const noexcept { return n_; }
  bool is_odd() const noexcept { return (n_ % 2) != 0; }

  // Inverse of 2 mod N, i.e. (N+1)/2. Throws ParityError for even N.
  int inv2() const;
  void require_odd(std::string_view operation) const;

  int reduce(long long v) const noexcept {
    long long r = v % n_;
    return static_cast<int>(r < 0 ? r + n_ : r);
  }
  // Representative in [-N/2, N/2).
  int signed_rep(long long v) const noexcept {
    int r = reduce(v);
    return 2 * r >= n_ ? r - n_ : r;
  }

  friend bool operator==(const GroupCtx&, const GroupCtx&) = default;

 private:
  int n_;
};

// Point of Z_N x Z_N with both components in [0, N).
struct PhasePoint {
  int x = 0;
  int xi = 0;

  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

PhasePoint make_point(const GroupCtx& ctx, long long x, long long xi);
PhasePoint add(const GroupCtx& ctx, PhasePoint a, PhasePoint b);
PhasePoint subtract(const GroupCtx& ctx, PhasePoint a, PhasePoint b);
// k * p, computed mod N.
PhasePoint scale(const GroupCtx& ctx, long long k, PhasePoint p);

class Signal {
 public:
  Signal(GroupCtx ctx, CVector values);

  static Signal zeros(GroupCtx ctx);
  static Signal delta(GroupCtx ctx, int t);

  const GroupCtx& ctx() const noexcept { return ctx_; }
  const CVector& values() const noexcept { return values_; }
  int size() const noexcept { return ctx_.n(); }
  // Index is taken mod N.
  Complex operator[](long long t) const { return values_[ctx_.reduce(t)]; }
  double norm() const { return values_.norm(); }

 private:
  GroupCtx ctx_;
  CVector values_;
};

// <f, g> = sum_t f(t) conj(g(t)).
Complex inner(const Signal& f, const Signal& g);
void require_same_group(const GroupCtx& a, const GroupCtx& b, std::string_view what);

// N x N complex array on phase space, rows indexed by x, columns by xi. The
// tag keeps STFT/Wigner outputs and symbols from being mixed up.
template <class Tag>
class PhaseField {
 public:
  PhaseField(GroupCtx ctx, CMatrix values) : ctx_(ctx), values_(std::move(values)) {
    if (values_.rows() != ctx_.n() || values_.cols() != ctx_.n())
      throw DimensionError("phase-space array must be N x N");
    if (!values_.allFinite()) throw DimensionError("phase-space array has non-finite entries");
  }

  static PhaseField zeros(GroupCtx ctx) {
    return PhaseField(ctx, CMatrix::Zero(ctx.n(), ctx.n()));
  }
  static PhaseField constant(GroupCtx ctx, Complex c) {
    return PhaseField(ctx, CMatrix::Constant(ctx.n(), ctx.n(), c));
  }

  const GroupCtx& ctx() const noexcept { return ctx_; }
  const CMatrix& values() const noexcept { return values_; }
  Complex operator()(long long x, long long xi) const {
    return values_(ctx_.reduce(x), ctx_.reduce(xi));
  }

  friend PhaseField operator+(const PhaseField& a, const PhaseField& b) {
    require_same_group(a.ctx_, b.ctx_, "phase-space sum");
    return PhaseField(a.ctx_, a.values_ + b.values_);
  }
  friend PhaseField operator-(const PhaseField& a, const PhaseField& b) {
    require_same_group(a.ctx_, b.ctx_, "phase-space difference");
    return PhaseField(a.ctx_, a.values_ - b.values_);
  }
  friend PhaseField operator*(Complex c, const PhaseField& a) {
    return PhaseField(a.ctx_, c * a.values_);
  }

 private:
  GroupCtx ctx_;
  CMatrix values_;
};

struct PhaseArrayTag;
struct SymbolTag;
using PhaseArray = PhaseField<PhaseArrayTag>;
using Symbol = PhaseField<SymbolTag>;

// Linear operator on signals of length N as a dense matrix.
class OperatorMatrix {
 public:
  OperatorMatrix(GroupCtx ctx, CMatrix values);

  static OperatorMatrix identity(GroupCtx ctx);

  const GroupCtx& ctx() const noexcept { return ctx_; }
  const CMatrix& values() const noexcept { return values_; }

  Signal apply(const Signal& f) const;
  OperatorMatrix adjoint() const { return OperatorMatrix(ctx_, values_.adjoint()); }

  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);

 private:
  GroupCtx ctx_;
  CMatrix values_;
};

}  // namespace gaborlab
