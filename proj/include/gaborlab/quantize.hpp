#pragma once

// Weyl and Kohn-Nirenberg quantization of symbols on Z_N x Z_N.
//
// Both maps send the constant symbol 1 to the identity:
//   KN:   K(x, y) = (1/N) sum_xi sigma(x, xi)           exp(2 pi i (x - y) xi / N)
//   Weyl: K(x, y) = (1/N) sum_xi sigma(h (x + y), xi)   exp(2 pi i (x - y) xi / N)
// with h = 2^{-1} mod N (Weyl needs odd N). The Weyl map satisfies the weak
// pairing <sigma^w f, g> = (1/N) <sigma, W(g, f)>.

#include "gaborlab/group.hpp"

namespace gaborlab {

enum class Calculus { Weyl, KohnNirenberg };

OperatorMatrix kn_quantize(const Symbol& sigma);
OperatorMatrix weyl_quantize(const Symbol& sigma);
OperatorMatrix quantize(const Symbol& sigma, Calculus calculus);

// Exact inverse of quantize for the given calculus.
Symbol dequantize(const OperatorMatrix& op, Calculus calculus);

// Symbol of quantize(sigma) * quantize(tau).
Symbol twisted_product(const Symbol& sigma, const Symbol& tau, Calculus calculus);

// KN symbol of weyl_quantize(sigma), computed as a phase-space multiplier:
// the 2-D DFT of sigma is multiplied by the chirp exp(2 pi i h p q / N).
Symbol kn_from_weyl(const Symbol& sigma);

}  // namespace gaborlab
