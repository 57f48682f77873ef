#pragma once

// Time-frequency shifts, short-time Fourier transform and cross-Wigner
// distribution on Z_N.
//
// Conventions (shared by the whole library):
//   pi(x, xi) f(t) = exp(2 pi i xi t / N) f(t - x)
//   V_g f(x, xi)   = sum_t f(t) conj(g(t - x)) exp(-2 pi i xi t / N) = <f, pi(x, xi) g>
//   W(f, g)(x, xi) = sum_t f(x + h t) conj(g(x - h t)) exp(-2 pi i xi t / N),  h = 2^{-1} mod N
//
// With these, W(f, g)(x, xi) = exp(4 pi i x xi / N) V_{g~} f(2x, 2xi) where
// g~(t) = g(-t); see wigner_via_stft.

#include "gaborlab/group.hpp"

namespace gaborlab {

Signal tf_shift(const Signal& f, PhasePoint z);

// One length-N DFT per time shift x.
PhaseArray stft(const Signal& f, const Signal& g);

// Requires odd N.
PhaseArray cross_wigner(const Signal& f, const Signal& g);

// Wigner distribution evaluated through the dilated STFT of f against the
// reflected window. Same values as cross_wigner; odd N only.
PhaseArray wigner_via_stft(const Signal& f, const Signal& g);

// g~(t) = g(-t).
Signal reflect(const Signal& g);

// j(z1, z2) = (z2, -z1): rotation by a quarter turn.
PhasePoint j_map(const GroupCtx& ctx, PhasePoint z);
PhasePoint j_inverse(const GroupCtx& ctx, PhasePoint z);

}  // namespace gaborlab
