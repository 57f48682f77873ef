#pragma once

// Symbol generators used by the experiments.

#include "gaborlab/quantize.hpp"
#include "gaborlab/random.hpp"

namespace gaborlab {

// Random symbol whose 2-D spectrum is complex Gaussian noise under the
// envelope exp(-(p^2 + q^2) / (2 width^2)) (p, q signed frequencies).
// Scaled to unit RMS entry.
Symbol gaussian_envelope_symbol(const GroupCtx& ctx, double width, Rng& rng);

// 1 + eps * s0 where s0 is a Gaussian-envelope symbol rescaled so that its
// operator (Weyl for odd N, Kohn-Nirenberg otherwise) has spectral norm 1.
// For |eps| < 1 the quantized operator is invertible.
Symbol eps_perturbation_symbol(const GroupCtx& ctx, double eps, double width, Rng& rng);

// Random symbol with 2-D spectrum supported on |p|, |q| <= band.
Symbol random_band_symbol(const GroupCtx& ctx, int band, Rng& rng);

// Independent complex Gaussian entries.
Symbol white_symbol(const GroupCtx& ctx, Rng& rng);

double operator_norm(const CMatrix& m);

}  // namespace gaborlab
