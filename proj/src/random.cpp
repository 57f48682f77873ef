#include "gaborlab/random.hpp"

#include <cmath>
#include <numbers>

namespace gaborlab {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

int Rng::below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

CVector Rng::complex_vector(Eigen::Index n) {
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = complex_normal();
  return v;
}

CMatrix Rng::complex_matrix(Eigen::Index rows, Eigen::Index cols) {
  CMatrix m(rows, cols);
  // Column-major fill order is part of the reproducible protocol.
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = complex_normal();
  return m;
}

Signal random_signal(const GroupCtx& ctx, Rng& rng) { return Signal(ctx, rng.complex_vector(ctx.n())); }

}  // namespace gaborlab
