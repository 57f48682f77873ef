#pragma once

// Matrices of operators with respect to a Gabor frame and their
// off-diagonal decay.

#include <vector>

#include "gaborlab/gabor.hpp"
#include "gaborlab/weight.hpp"

namespace gaborlab {

// K x K matrix indexed by lattice points in Lattice::index order.
class GaborMatrix {
 public:
  GaborMatrix(Lattice lattice, CMatrix values);

  static GaborMatrix identity(const Lattice& lattice);
  // Permutation (c)(lambda) -> c(lambda - shift): entry 1 at (lambda, lambda - shift).
  static GaborMatrix lattice_shift(const Lattice& lattice, int shift_index);

  const Lattice& lattice() const noexcept { return lattice_; }
  const CMatrix& values() const noexcept { return values_; }
  int size() const noexcept { return lattice_.size(); }

  CoeffArray apply(const CoeffArray& c) const;
  GaborMatrix adjoint() const { return GaborMatrix(lattice_, values_.adjoint()); }

  friend GaborMatrix operator*(const GaborMatrix& a, const GaborMatrix& b);

 private:
  Lattice lattice_;
  CMatrix values_;
};

// h(mu) = max_lambda |M_{lambda, lambda - mu}|, indexed like the lattice.
class DecayProfile {
 public:
  DecayProfile(Lattice lattice, RVector values);

  const Lattice& lattice() const noexcept { return lattice_; }
  const RVector& values() const noexcept { return values_; }
  double operator[](int index) const { return values_[index]; }

 private:
  Lattice lattice_;
  RVector values_;
};

// V_Phi sigma(z, zeta) for z, zeta in Z_N^2, with Phi = W(g, g).
class SymbolSTFT {
 public:
  static constexpr int kMaxN = 32;

  SymbolSTFT(GroupCtx ctx, std::vector<Complex> values);

  const GroupCtx& ctx() const noexcept { return ctx_; }
  Complex operator()(PhasePoint z, PhasePoint zeta) const;
  const std::vector<Complex>& values() const noexcept { return values_; }

 private:
  GroupCtx ctx_;
  std::vector<Complex> values_;  // ((z1 N + z2) N + zeta1) N + zeta2
};

// M_{lambda mu} = <T pi(mu) w, pi(lambda) w>; w is the primary window
// unless another is requested.
GaborMatrix gabor_matrix(const OperatorMatrix& op, const GaborSystem& sys, Window w = Window::Primary);

// ||C_g(T f) - M(T) C_gamma f|| / ||C_g(T f)||; the absolute norm when the
// left side vanishes.
double diagram_check(const OperatorMatrix& op, const GaborSystem& sys, const Signal& f);

DecayProfile decay_profile(const GaborMatrix& m);

// sum_mu h(mu) v(mu), v at signed representatives of the lattice points.
double cv_norm(const DecayProfile& h, const Weight& v);
double cv_norm(const GaborMatrix& m, const Weight& v);

// Odd N <= 32 only.
SymbolSTFT symbol_stft(const Symbol& sigma, const Signal& g);

// sum_zeta max_z |V_Phi sigma(z, zeta)| v(zeta).
double sjostrand_norm(const SymbolSTFT& v_sigma, const Weight& v);
double sjostrand_norm(const Symbol& sigma, const Signal& g, const Weight& v);

}  // namespace gaborlab
