#pragma once

// Unnormalized DFT helpers over Eigen's FFT module.
//   forward:  X(k) = sum_t x(t) exp(-2 pi i k t / N)
//   backward: x(t) = sum_k X(k) exp(+2 pi i k t / N)   (no 1/N)

#include "gaborlab/group.hpp"

namespace gaborlab::dft {

CVector forward(const CVector& x);
CVector backward(const CVector& x);

// Row transforms followed by column transforms.
CMatrix forward2(const CMatrix& x);
CMatrix backward2(const CMatrix& x);

}  // namespace gaborlab::dft
