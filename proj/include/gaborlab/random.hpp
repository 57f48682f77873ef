#pragma once

#include <cstdint>
#include <random>

#include "gaborlab/group.hpp"

namespace gaborlab {

// Seeded generator. Only raw 64-bit engine output is consumed, so draws are
// identical across standard libraries (std distributions are not).
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64 (53-bit uniform, Box-Muller normal)";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double normal();
  Complex complex_normal();  // E|z|^2 = 1
  int below(int n);  // uniform on {0, ..., n-1}

  CVector complex_vector(Eigen::Index n);
  CMatrix complex_matrix(Eigen::Index rows, Eigen::Index cols);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

Signal random_signal(const GroupCtx& ctx, Rng& rng);

}  // namespace gaborlab
