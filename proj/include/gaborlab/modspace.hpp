#pragma once

// Weighted mixed norms on lattice coefficients and the discrete modulation
// space norms built from them.

#include <cstdint>
#include <limits>

#include "gaborlab/gabor_matrix.hpp"
#include "gaborlab/weight.hpp"

namespace gaborlab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

class MixedNormSpec {
 public:
  // p, q in [1, inf].
  MixedNormSpec(double p, double q, ModerateWeight m);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  const ModerateWeight& m() const noexcept { return m_; }
  // e.g. "p=1,q=inf,m=poly(s=2)"
  std::string id() const;

 private:
  double p_;
  double q_;
  ModerateWeight m_;
};

// ( sum_l ( sum_k |c(k,l)|^p m(ak, bl)^p )^{q/p} )^{1/q}, max for infinite
// exponents. The inner sum runs over the time index.
double mixed_norm(const CoeffArray& c, const MixedNormSpec& spec);

// mixed_norm(analyze(f, w), spec).
double mod_norm(const Signal& f, const GaborSystem& sys, const MixedNormSpec& spec, Window w);

struct YoungReport {
  double max_ratio = 0.0;  // max mixed_norm(Mc) / mixed_norm(c)
  double bound = 0.0;      // cv_norm(M, v) * C_m
  int trials = 0;
  bool holds = true;
};

// Checks mixed_norm(M c) <= cv_norm(M, v) C_m mixed_norm(c) on `trials`
// random complex Gaussian arrays. v must be the base weight of spec.m().
YoungReport young_bound_check(const GaborMatrix& m, const Weight& v, const MixedNormSpec& spec, int trials,
                              std::uint64_t seed);

// Translation (T_{(r,s)} c)(k, l) = c(k - r, l - s) on the lattice group.
CoeffArray translate(const CoeffArray& c, int r, int s);

}  // namespace gaborlab
