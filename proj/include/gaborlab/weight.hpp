#pragma once

// Weights on phase space. A weight is evaluated on an integer vector of Z^2;
// group elements are first mapped to their signed representatives in
// [-N/2, N/2)^2 so that weights decay on the cyclic group instead of being
// periodic.

#include <cstdint>
#include <optional>
#include <string>

#include "gaborlab/group.hpp"

namespace gaborlab {

class Weight {
 public:
  enum class Kind { Constant, Polynomial, Subexponential, Custom };

  static Weight constant();
  // (1 + |z|)^s, s >= 0.
  static Weight polynomial(double s);
  // exp(a |z|^b), a >= 0, 0 <= b < 1.
  static Weight subexponential(double a, double b);
  // Tabulated weight on Z_N x Z_N (rows x, columns xi, canonical residues).
  // Rejected unless v(0) = 1, it is even in each coordinate and
  // submultiplicative on a fixed-seed sample of 10^4 pairs. `grs` records
  // whether the caller asserts the GRS condition; it cannot be checked.
  static Weight custom(GroupCtx ctx, RMatrix table, bool grs);

  Kind kind() const noexcept { return kind_; }
  // True for the built-in families; caller-provided metadata for Custom.
  bool satisfies_grs() const noexcept { return grs_; }
  double exponent() const noexcept { return s_; }
  double rate() const noexcept { return a_; }
  double power() const noexcept { return b_; }
  // Stable short identifier, e.g. "poly(s=2)".
  std::string id() const;

  // Weight at an integer vector (not reduced, except for Custom tables).
  double operator()(long long x, long long xi) const;
  // Weight at a group element, through its signed representative.
  double at(const GroupCtx& ctx, PhasePoint z) const;

  // v o j^{-1}, i.e. z -> v(j^{-1} z) with j^{-1}(z1, z2) = (-z2, z1).
  Weight rotated() const;

 private:
  Weight() = default;

  Kind kind_ = Kind::Constant;
  double s_ = 0.0;
  double a_ = 0.0;
  double b_ = 0.0;
  bool grs_ = true;
  int quarter_turns_ = 0;  // applications of j^{-1} before evaluation
  std::optional<GroupCtx> ctx_;
  RMatrix table_;
};

// Largest violation ratio max v(w + z) / (v(w) v(z)) over `pairs` random
// pairs of signed representatives of Z_N^2 (sum taken before reduction).
// Values <= 1 mean no violation was found.
double submultiplicativity_defect(const Weight& v, const GroupCtx& ctx, int pairs, std::uint64_t seed);

// m(w + z) <= C v(z) m(w) with group addition; C is validated on 10^4
// sampled pairs at construction.
class ModerateWeight {
 public:
  ModerateWeight(GroupCtx ctx, Weight m, Weight base, double constant);

  // Picks the constant: 1 when it holds analytically (m constant, or
  // polynomial m dominated by polynomial v), otherwise the largest ratio
  // over all pairs (N <= 32) or over a fixed-seed sample.
  static ModerateWeight calibrated(GroupCtx ctx, Weight m, Weight base);
  // m = 1 against base v.
  static ModerateWeight unweighted(GroupCtx ctx, Weight base);

  const GroupCtx& ctx() const noexcept { return ctx_; }
  const Weight& m() const noexcept { return m_; }
  const Weight& base() const noexcept { return base_; }
  double constant() const noexcept { return constant_; }

 private:
  GroupCtx ctx_;
  Weight m_;
  Weight base_;
  double constant_;
};

}  // namespace gaborlab
