#pragma once

// Gabor frames over separable lattices aZ_N x bZ_N.

#include <utility>

#include "gaborlab/group.hpp"

namespace gaborlab {

// Subgroup {(k a, l b)} of Z_N x Z_N. Points are enumerated row-major in
// (l, k): index = l * (N / a) + k.
class Lattice {
 public:
  Lattice(GroupCtx ctx, int a, int b);

  const GroupCtx& ctx() const noexcept { return ctx_; }
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  int time_count() const noexcept { return ctx_.n() / a_; }
  int freq_count() const noexcept { return ctx_.n() / b_; }
  int size() const noexcept { return time_count() * freq_count(); }

  // k and l are taken mod time_count() and freq_count().
  int index(long long k, long long l) const;
  std::pair<int, int> coords(int index) const;
  PhasePoint point(int index) const;

  // Index of lambda_i - lambda_j and lambda_i + lambda_j in the lattice group.
  int difference(int i, int j) const;
  int sum(int i, int j) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  GroupCtx ctx_;
  int a_;
  int b_;
};

// Coefficients indexed by lattice points in Lattice::index order.
class CoeffArray {
 public:
  CoeffArray(Lattice lattice, CVector values);

  static CoeffArray zeros(const Lattice& lattice);
  static CoeffArray delta(const Lattice& lattice, int index);

  const Lattice& lattice() const noexcept { return lattice_; }
  const CVector& values() const noexcept { return values_; }
  Complex operator()(long long k, long long l) const { return values_[lattice_.index(k, l)]; }

 private:
  Lattice lattice_;
  CVector values_;
};

enum class Window { Primary, Dual, Tight };

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Window, lattice, frame operator and the derived canonical dual and tight
// windows. Immutable once built.
class GaborSystem {
 public:
  const Lattice& lattice() const noexcept { return lattice_; }
  const GroupCtx& ctx() const noexcept { return lattice_.ctx(); }
  const Signal& window(Window w) const noexcept;
  const Signal& primary() const noexcept { return g_; }
  const Signal& dual() const noexcept { return gamma_; }
  const Signal& tight() const noexcept { return tight_; }
  const CMatrix& frame_operator() const noexcept { return frame_operator_; }
  FrameBounds bounds() const noexcept { return bounds_; }

  // N x K synthesis matrix whose columns are pi(lambda) w.
  CMatrix atoms(Window w) const;

 private:
  friend GaborSystem build_system(const Signal& g, int a, int b, double rel_tol);
  GaborSystem(Lattice lattice, Signal g, Signal gamma, Signal tight, CMatrix frame_operator,
              FrameBounds bounds);

  Lattice lattice_;
  Signal g_;
  Signal gamma_;
  Signal tight_;
  CMatrix frame_operator_;
  FrameBounds bounds_;
};

// Builds S = C_g^* C_g densely and derives S^{-1} g and S^{-1/2} g from its
// eigendecomposition. Throws LatticeError if a or b does not divide N and
// NotAFrameError when a*b > N or the smallest eigenvalue of S is below
// rel_tol times the largest.
GaborSystem build_system(const Signal& g, int a, int b, double rel_tol = 1e-10);

// sum_{k=-terms}^{terms} exp(-pi (t + kN)^2 / N), normalized to unit l2 norm.
Signal periodized_gaussian(const GroupCtx& ctx, int terms = 6);

// <f, pi(lambda) w> for all lattice points, via the subsampled STFT.
CoeffArray analyze(const GaborSystem& sys, const Signal& f, Window w);

// sum_lambda c(lambda) pi(lambda) w; the adjoint of analyze with the same window.
Signal synthesize(const GaborSystem& sys, const CoeffArray& c, Window w);

}  // namespace gaborlab
