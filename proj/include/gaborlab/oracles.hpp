#pragma once

// Slow reference evaluations straight from the defining sums. They share no
// code with the fast paths (no DFT helpers, no kernel re-indexing) and exist
// to check them.

#include "gaborlab/gabor_matrix.hpp"

namespace gaborlab::oracles {

// Double loop over (x, xi) with an explicit inner sum over t.
PhaseArray stft_naive(const Signal& f, const Signal& g);

PhaseArray cross_wigner_naive(const Signal& f, const Signal& g);

// Kernel of the Weyl / KN quantization by direct summation over xi.
CMatrix weyl_kernel_naive(const Symbol& sigma);
CMatrix kn_kernel_naive(const Symbol& sigma);

// S = sum_lambda pi(lambda)g (pi(lambda)g)^* with shifts built elementwise.
CMatrix frame_operator_naive(const Signal& g, int a, int b);

// <T pi(mu) g, pi(lambda) g> entry by entry.
CMatrix gabor_matrix_naive(const CMatrix& op, const Signal& g, const Lattice& lattice);

// Double loop max over (lambda, nu) with lambda - nu = mu.
RVector decay_profile_naive(const CMatrix& m, const Lattice& lattice);

// sum_{k=0}^{order} (-X)^k, the Neumann series for (I + X)^{-1}.
CMatrix neumann_inverse(const CMatrix& x, int order);

}  // namespace gaborlab::oracles
