#include "doctest.h"

#include <cmath>
#include <numbers>

#include "gaborlab/oracles.hpp"
#include "gaborlab/quantize.hpp"
#include "gaborlab/symbols.hpp"
#include "gaborlab/tf_core.hpp"

using namespace gaborlab;

namespace {

double rel(const CMatrix& a, const CMatrix& b) { return (a - b).norm() / b.norm(); }

Symbol x_only(const GroupCtx& ctx, const CVector& m) {
  CMatrix v(ctx.n(), ctx.n());
  for (int x = 0; x < ctx.n(); ++x) v.row(x).setConstant(m[x]);
  return Symbol(ctx, v);
}

}  // namespace

TEST_CASE("kn_quantize") {
  const GroupCtx ctx(8);
  Rng rng(1);

  SUBCASE("constant one is the identity") {
    CHECK((kn_quantize(Symbol::constant(ctx, 1.0)).values() - CMatrix::Identity(8, 8)).norm() < 1e-14);
  }

  SUBCASE("x-only symbol is a multiplication operator") {
    const CVector m = rng.complex_vector(8);
    const CMatrix k = kn_quantize(x_only(ctx, m)).values();
    CHECK((k - CMatrix(m.asDiagonal())).norm() < 1e-13);
  }

  SUBCASE("pure modulation symbol translates: (sigma f)(x) = f(x + s)") {
    for (int s = 0; s < 8; ++s) {
      CMatrix v(8, 8);
      for (int x = 0; x < 8; ++x)
        for (int xi = 0; xi < 8; ++xi) v(x, xi) = std::polar(1.0, 2.0 * std::numbers::pi * xi * s / 8.0);
      const Signal f = random_signal(ctx, rng);
      const Signal out = kn_quantize(Symbol(ctx, v)).apply(f);
      for (int x = 0; x < 8; ++x) CHECK(std::abs(out[x] - f[x + s]) < 1e-13);
    }
  }

  SUBCASE("matches the defining sum") {
    const Symbol sigma = white_symbol(GroupCtx(12), rng);
    CHECK(rel(kn_quantize(sigma).values(), oracles::kn_kernel_naive(sigma)) < 1e-13);
  }
}

TEST_CASE("weyl_quantize") {
  const GroupCtx ctx(15);
  Rng rng(2);

  SUBCASE("constant one is the identity") {
    CHECK((weyl_quantize(Symbol::constant(ctx, 1.0)).values() - CMatrix::Identity(15, 15)).norm() < 1e-14);
  }

  SUBCASE("real symbols give Hermitian operators, conjugation gives the adjoint") {
    const Symbol sigma = white_symbol(ctx, rng);
    const Symbol real_part(ctx, sigma.values().real().cast<Complex>());
    const CMatrix k = weyl_quantize(real_part).values();
    CHECK((k - k.adjoint()).norm() < 1e-13 * k.norm());
    const Symbol conj(ctx, sigma.values().conjugate());
    CHECK(rel(weyl_quantize(conj).values(), weyl_quantize(sigma).values().adjoint()) < 1e-13);
  }

  SUBCASE("matches the defining sum") {
    const Symbol sigma = white_symbol(ctx, rng);
    CHECK(rel(weyl_quantize(sigma).values(), oracles::weyl_kernel_naive(sigma)) < 1e-13);
  }

  SUBCASE("weak pairing with the Wigner distribution has constant 1/N") {
    // <sigma^w f, h> = c_N <sigma, W(h, f)>; measure c_N on every trial.
    std::vector<Complex> constants;
    for (int trial = 0; trial < 50; ++trial) {
      const Symbol sigma = white_symbol(ctx, rng);
      const Signal f = random_signal(ctx, rng);
      const Signal h = random_signal(ctx, rng);
      const Complex lhs = inner(weyl_quantize(sigma).apply(f), h);
      const PhaseArray w = cross_wigner(h, f);
      const Complex pairing = w.values().conjugate().cwiseProduct(sigma.values()).sum();
      constants.push_back(lhs / pairing);
    }
    for (const Complex& c : constants) CHECK(std::abs(c - constants.front()) < 1e-12);
    CHECK(std::abs(constants.front() - 1.0 / 15.0) < 1e-13);
  }

  SUBCASE("linearity") {
    const Symbol a = white_symbol(ctx, rng);
    const Symbol b = white_symbol(ctx, rng);
    const Complex c(0.3, -1.7);
    const CMatrix lhs = weyl_quantize(a + c * b).values();
    CHECK(rel(lhs, weyl_quantize(a).values() + c * weyl_quantize(b).values()) < 1e-13);
  }

  SUBCASE("even N is rejected") { CHECK_THROWS_AS(weyl_quantize(Symbol::constant(GroupCtx(8), 1.0)), ParityError); }
}

TEST_CASE("dequantize") {
  Rng rng(3);
  SUBCASE("identity has the all-ones KN symbol") {
    const GroupCtx ctx(10);
    CHECK((dequantize(OperatorMatrix::identity(ctx), Calculus::KohnNirenberg).values() -
           CMatrix::Ones(10, 10)).norm() < 1e-13);
  }
  SUBCASE("KN round trip at N=16") {
    const Symbol sigma = white_symbol(GroupCtx(16), rng);
    CHECK(rel(dequantize(kn_quantize(sigma), Calculus::KohnNirenberg).values(), sigma.values()) < 1e-12);
  }
  SUBCASE("Weyl round trip at N=15") {
    const Symbol sigma = white_symbol(GroupCtx(15), rng);
    CHECK(rel(dequantize(weyl_quantize(sigma), Calculus::Weyl).values(), sigma.values()) < 1e-12);
  }
  SUBCASE("operator round trip for arbitrary matrices") {
    const GroupCtx ctx(9);
    const OperatorMatrix t(ctx, rng.complex_matrix(9, 9));
    for (Calculus c : {Calculus::Weyl, Calculus::KohnNirenberg})
      CHECK(rel(quantize(dequantize(t, c), c).values(), t.values()) < 1e-12);
  }
  SUBCASE("Weyl branch rejects even N") {
    CHECK_THROWS_AS(dequantize(OperatorMatrix::identity(GroupCtx(6)), Calculus::Weyl), ParityError);
  }
}

TEST_CASE("twisted_product") {
  const GroupCtx ctx(15);
  Rng rng(4);
  const Symbol one = Symbol::constant(ctx, 1.0);
  const Symbol a = white_symbol(ctx, rng);
  const Symbol b = white_symbol(ctx, rng);
  const Symbol c = white_symbol(ctx, rng);

  for (Calculus calc : {Calculus::Weyl, Calculus::KohnNirenberg}) {
    CHECK(rel(twisted_product(a, one, calc).values(), a.values()) < 1e-12);
    CHECK(rel(twisted_product(one, a, calc).values(), a.values()) < 1e-12);
    const Symbol left = twisted_product(twisted_product(a, b, calc), c, calc);
    const Symbol right = twisted_product(a, twisted_product(b, c, calc), calc);
    CHECK(rel(left.values(), right.values()) < 1e-10);
    // Distributivity.
    CHECK(rel(twisted_product(a, b + c, calc).values(),
              twisted_product(a, b, calc).values() + twisted_product(a, c, calc).values()) < 1e-12);
  }

  SUBCASE("operator norm is submultiplicative") {
    const double lhs = operator_norm(weyl_quantize(twisted_product(a, b, Calculus::Weyl)).values());
    CHECK(lhs <= operator_norm(weyl_quantize(a).values()) * operator_norm(weyl_quantize(b).values()) * (1 + 1e-12));
  }

  SUBCASE("x-only KN symbols multiply pointwise") {
    const GroupCtx c8(8);
    const CVector m1 = rng.complex_vector(8);
    const CVector m2 = rng.complex_vector(8);
    const Symbol prod = twisted_product(x_only(c8, m1), x_only(c8, m2), Calculus::KohnNirenberg);
    CHECK(rel(prod.values(), x_only(c8, m1.cwiseProduct(m2)).values()) < 1e-12);
  }

  SUBCASE("Weyl needs odd N") {
    const Symbol e = Symbol::constant(GroupCtx(8), 1.0);
    CHECK_THROWS_AS(twisted_product(e, e, Calculus::Weyl), ParityError);
  }
}

TEST_CASE("kn_from_weyl") {
  const GroupCtx ctx(15);
  Rng rng(5);
  CHECK((kn_from_weyl(Symbol::constant(ctx, 1.0)).values() - CMatrix::Ones(15, 15)).norm() < 1e-12);

  const CVector m = rng.complex_vector(15);
  CHECK(rel(kn_from_weyl(x_only(ctx, m)).values(), x_only(ctx, m).values()) < 1e-12);

  for (int trial = 0; trial < 5; ++trial) {
    const Symbol sigma = white_symbol(ctx, rng);
    const Symbol kn = kn_from_weyl(sigma);
    CHECK(rel(kn_quantize(kn).values(), weyl_quantize(sigma).values()) < 1e-10);
    CHECK(rel(kn.values(), dequantize(weyl_quantize(sigma), Calculus::KohnNirenberg).values()) < 1e-10);
  }
  CHECK_THROWS_AS(kn_from_weyl(Symbol::constant(GroupCtx(4), 1.0)), ParityError);
}
