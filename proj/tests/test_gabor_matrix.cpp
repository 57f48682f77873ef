#include "doctest.h"

#include <cmath>

#include "gaborlab/gabor_matrix.hpp"
#include "gaborlab/oracles.hpp"
#include "gaborlab/quantize.hpp"
#include "gaborlab/symbols.hpp"
#include "gaborlab/tf_core.hpp"

using namespace gaborlab;

namespace {

OperatorMatrix shift_operator(const GroupCtx& ctx, PhasePoint z) {
  CMatrix m(ctx.n(), ctx.n());
  for (int t = 0; t < ctx.n(); ++t) m.col(t) = tf_shift(Signal::delta(ctx, t), z).values();
  return OperatorMatrix(ctx, m);
}

double rel(const CMatrix& a, const CMatrix& b) { return (a - b).norm() / b.norm(); }

}  // namespace

TEST_CASE("gabor_matrix") {
  const GroupCtx ctx(24);
  const GaborSystem sys = build_system(periodized_gaussian(ctx), 4, 4);
  const CMatrix atoms = sys.atoms(Window::Primary);
  Rng rng(7);

  SUBCASE("identity gives the Gram matrix") {
    const GaborMatrix m = gabor_matrix(OperatorMatrix::identity(ctx), sys);
    CHECK(rel(m.values(), atoms.adjoint() * atoms) < 1e-13);
    for (int i = 0; i < m.size(); ++i) CHECK(std::abs(m.values()(i, i).real() - 1.0) < 1e-12);
  }

  SUBCASE("zero operator") {
    CHECK(gabor_matrix(OperatorMatrix(ctx, CMatrix::Zero(24, 24)), sys).values().norm() == 0.0);
  }

  SUBCASE("time-frequency shift: modulus is the Gram envelope shifted by nu0") {
    const PhasePoint nu0{4, 8};
    const GaborMatrix m = gabor_matrix(shift_operator(ctx, nu0), sys);
    const CMatrix gram = atoms.adjoint() * atoms;
    const Lattice& lat = sys.lattice();
    const int shift = lat.index(1, 2);
    REQUIRE(lat.point(shift) == nu0);
    for (int i = 0; i < lat.size(); ++i)
      for (int j = 0; j < lat.size(); ++j)
        CHECK(std::abs(std::abs(m.values()(i, j)) - std::abs(gram(i, lat.sum(j, shift)))) < 1e-12);
  }

  SUBCASE("matches the double sum") {
    const OperatorMatrix t(ctx, rng.complex_matrix(24, 24));
    const CMatrix naive = oracles::gabor_matrix_naive(t.values(), sys.primary(), sys.lattice());
    CHECK(rel(gabor_matrix(t, sys).values(), naive) < 1e-12);
  }

  SUBCASE("adjoint operator gives the adjoint matrix") {
    const OperatorMatrix t(ctx, rng.complex_matrix(24, 24));
    CHECK(rel(gabor_matrix(t.adjoint(), sys).values(), gabor_matrix(t, sys).adjoint().values()) < 1e-13);
  }

  SUBCASE("group mismatch") {
    CHECK_THROWS_AS(gabor_matrix(OperatorMatrix::identity(GroupCtx(12)), sys), DimensionError);
  }
}

TEST_CASE("diagram_check") {
  Rng rng(8);
  const GroupCtx ctx(48);
  const GaborSystem sys = build_system(periodized_gaussian(ctx), 4, 4);

  CHECK(diagram_check(OperatorMatrix::identity(ctx), sys, random_signal(ctx, rng)) < 1e-12);
  for (int trial = 0; trial < 3; ++trial) {
    const OperatorMatrix t(ctx, rng.complex_matrix(48, 48));
    CHECK(diagram_check(t, sys, random_signal(ctx, rng)) < 1e-10);
  }
  CHECK(diagram_check(OperatorMatrix::identity(ctx), sys, Signal::zeros(ctx)) == 0.0);
}

TEST_CASE("decay_profile") {
  const GroupCtx ctx(24);
  const Lattice lat(ctx, 4, 4);

  SUBCASE("identity") {
    const DecayProfile h = decay_profile(GaborMatrix::identity(lat));
    CHECK(h[0] == 1.0);
    CHECK(h.values().sum() == 1.0);
  }

  SUBCASE("lattice shift concentrates at the shift") {
    const int s = lat.index(2, 5);
    const DecayProfile h = decay_profile(GaborMatrix::lattice_shift(lat, s));
    CHECK(h[s] == 1.0);
    CHECK(h.values().sum() == 1.0);
  }

  SUBCASE("matches the naive maximum") {
    Rng rng(9);
    const Lattice small(GroupCtx(12), 2, 2);
    const CMatrix m = rng.complex_matrix(small.size(), small.size());
    CHECK((decay_profile(GaborMatrix(small, m)).values() - oracles::decay_profile_naive(m, small)).norm() == 0.0);
  }

  SUBCASE("negative entries are rejected") {
    RVector v = RVector::Zero(lat.size());
    v[3] = -1.0;
    CHECK_THROWS_AS(DecayProfile(lat, v), PreconditionError);
  }
}

TEST_CASE("cv_norm") {
  const GroupCtx ctx(24);
  const Lattice lat(ctx, 4, 4);
  Rng rng(10);
  const Weight v = Weight::polynomial(2.0);

  SUBCASE("unit weight of the identity and shifts") {
    CHECK(cv_norm(GaborMatrix::identity(lat), v) == doctest::Approx(1.0));
    const int s = lat.index(1, 1);
    CHECK(cv_norm(GaborMatrix::lattice_shift(lat, s), v) == doctest::Approx(v.at(ctx, lat.point(s))));
  }

  SUBCASE("norm axioms") {
    const GaborMatrix a(lat, rng.complex_matrix(lat.size(), lat.size()));
    const GaborMatrix b(lat, rng.complex_matrix(lat.size(), lat.size()));
    CHECK(cv_norm(GaborMatrix(lat, CMatrix::Zero(lat.size(), lat.size())), v) == 0.0);
    CHECK(cv_norm(GaborMatrix(lat, Complex(0, -3) * a.values()), v) == doctest::Approx(3.0 * cv_norm(a, v)));
    CHECK(cv_norm(GaborMatrix(lat, a.values() + b.values()), v) <= (cv_norm(a, v) + cv_norm(b, v)) * (1 + 1e-12));
  }

  SUBCASE("submultiplicative on banded pairs") {
    auto banded = [&](int width) {
      CMatrix m = CMatrix::Zero(lat.size(), lat.size());
      for (int i = 0; i < lat.size(); ++i)
        for (int j = 0; j < lat.size(); ++j) {
          const PhasePoint d = lat.point(lat.difference(i, j));
          if (std::abs(ctx.signed_rep(d.x)) <= 4 * width && std::abs(ctx.signed_rep(d.xi)) <= 4 * width)
            m(i, j) = rng.complex_normal();
        }
      return GaborMatrix(lat, m);
    };
    for (int trial = 0; trial < 100; ++trial) {
      const GaborMatrix a = banded(1 + trial % 3);
      const GaborMatrix b = banded(1 + (trial / 3) % 3);
      CHECK(cv_norm(a * b, v) <= cv_norm(a, v) * cv_norm(b, v) * (1 + 1e-12));
    }
  }
}

TEST_CASE("symbol_stft and sjostrand_norm") {
  const GroupCtx ctx(15);
  Rng rng(11);
  const Signal g = periodized_gaussian(ctx);
  const Weight v = Weight::polynomial(1.0);

  SUBCASE("Phi against itself at the origin is ||Phi||^2") {
    const PhaseArray phi = cross_wigner(g, g);
    const SymbolSTFT s = symbol_stft(Symbol(ctx, phi.values()), g);
    CHECK(std::abs(s({0, 0}, {0, 0}) - phi.values().squaredNorm()) < 1e-10 * phi.values().squaredNorm());
  }

  SUBCASE("zero symbol") {
    CHECK(sjostrand_norm(Symbol::zeros(ctx), g, v) == 0.0);
  }

  SUBCASE("fundamental identity: |<sigma pi(z) g, pi(w) g>| = |V_Phi sigma(h(w+z), j(w-z))| / N") {
    const Symbol sigma = white_symbol(ctx, rng);
    const SymbolSTFT s = symbol_stft(sigma, g);
    const OperatorMatrix op = weyl_quantize(sigma);
    const int h = ctx.inv2();
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const PhasePoint z = make_point(ctx, rng.below(15), rng.below(15));
      const PhasePoint w = make_point(ctx, rng.below(15), rng.below(15));
      const double lhs = std::abs(inner(op.apply(tf_shift(g, z)), tf_shift(g, w)));
      const PhasePoint mid = scale(ctx, h, add(ctx, w, z));
      const double rhs = std::abs(s(mid, j_map(ctx, subtract(ctx, w, z)))) / 15.0;
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    CHECK(worst < 1e-10);
  }

  SUBCASE("norm axioms") {
    const Symbol a = white_symbol(ctx, rng);
    const Symbol b = white_symbol(ctx, rng);
    const double na = sjostrand_norm(a, g, v);
    CHECK(sjostrand_norm(Complex(2.0, 0.0) * a, g, v) == doctest::Approx(2.0 * na));
    CHECK(sjostrand_norm(a + b, g, v) <= (na + sjostrand_norm(b, g, v)) * (1 + 1e-12));
  }

  SUBCASE("Gabor-matrix and Sjostrand norms are comparable") {
    const GaborSystem sys = build_system(g, 3, 3);
    const Weight w0 = Weight::polynomial(1.0);
    double lo = 1e300, hi = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const Symbol sigma = gaussian_envelope_symbol(ctx, 2.0, rng);
      const double ratio = cv_norm(gabor_matrix(weyl_quantize(sigma), sys), w0) / sjostrand_norm(sigma, g, w0);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    MESSAGE("cv / sjostrand ratio in [" << lo << ", " << hi << "]");
    CHECK(hi / lo < 100.0);
  }

  SUBCASE("limits") {
    CHECK_THROWS_AS(symbol_stft(Symbol::zeros(GroupCtx(16)), periodized_gaussian(GroupCtx(16))), ParityError);
    CHECK_THROWS_AS(symbol_stft(Symbol::zeros(GroupCtx(33)), periodized_gaussian(GroupCtx(33))), SizeLimitError);
  }
}
