#include "doctest.h"

#include <cmath>

#include "gaborlab/modspace.hpp"
#include "gaborlab/random.hpp"

using namespace gaborlab;

TEST_CASE("weight families") {
  const GroupCtx ctx(32);

  SUBCASE("values") {
    CHECK(Weight::constant()(5, -3) == 1.0);
    CHECK(Weight::polynomial(2.0)(3, 4) == doctest::Approx(36.0));
    CHECK(Weight::subexponential(0.5, 0.5)(3, 4) == doctest::Approx(std::exp(0.5 * std::sqrt(5.0))));
    // Signed representatives: 31 is -1, so v decays instead of wrapping.
    CHECK(Weight::polynomial(1.0).at(ctx, {31, 0}) == doctest::Approx(2.0));
  }

  SUBCASE("axioms on built-in families") {
    for (const Weight& v : {Weight::constant(), Weight::polynomial(0.0), Weight::polynomial(1.5),
                            Weight::polynomial(4.0), Weight::subexponential(0.3, 0.5),
                            Weight::subexponential(1.0, 0.0)}) {
      CHECK(v(0, 0) == doctest::Approx(v.kind() == Weight::Kind::Subexponential && v.power() == 0.0
                                           ? std::exp(v.rate())
                                           : 1.0));
      CHECK(v(3, -7) == v(-3, 7));
      CHECK(v(3, -7) == v(3, 7));
      CHECK(v.satisfies_grs());
    }
    for (const Weight& v : {Weight::polynomial(1.5), Weight::subexponential(0.3, 0.5)})
      CHECK(submultiplicativity_defect(v, ctx, 10000, 1) <= 1.0 + 1e-12);
  }

  SUBCASE("rejections") {
    CHECK_THROWS_AS(Weight::polynomial(-1.0), PreconditionError);
    CHECK_THROWS_AS(Weight::subexponential(1.0, 1.0), PreconditionError);
    CHECK_THROWS_AS(Weight::subexponential(-1.0, 0.5), PreconditionError);
  }

  SUBCASE("exponential weight only as a custom table without GRS") {
    const GroupCtx c(16);
    RMatrix table(16, 16);
    for (int x = 0; x < 16; ++x)
      for (int xi = 0; xi < 16; ++xi)
        table(x, xi) = std::exp(0.2 * (std::abs(c.signed_rep(x)) + std::abs(c.signed_rep(xi))));
    // exp(|x|+|xi|) with the wrap-around reduction: folding only shortens
    // |.|, so submultiplicativity survives.
    const Weight e = Weight::custom(c, table, false);
    CHECK_FALSE(e.satisfies_grs());
    CHECK(e.kind() == Weight::Kind::Custom);
    CHECK(e.at(c, {3, 0}) == doctest::Approx(std::exp(0.6)));
  }

  SUBCASE("custom table rejections") {
    const GroupCtx c(8);
    RMatrix ones = RMatrix::Ones(8, 8);
    RMatrix bad = ones;
    bad(0, 0) = 2.0;
    CHECK_THROWS_AS(Weight::custom(c, bad, true), PreconditionError);
    bad = ones;
    bad(1, 0) = 2.0;  // not even
    CHECK_THROWS_AS(Weight::custom(c, bad, true), PreconditionError);
    bad = ones;
    bad(2, 3) = -1.0;
    CHECK_THROWS_AS(Weight::custom(c, bad, true), PreconditionError);
    // Even but not submultiplicative: v(2) > v(1)^2.
    bad = ones;
    for (int x : {2, 6})
      for (int xi = 0; xi < 8; ++xi) bad(x, xi) = 5.0;
    CHECK_THROWS_AS(Weight::custom(c, bad, true), PreconditionError);
    CHECK_THROWS_AS(Weight::custom(c, RMatrix::Ones(4, 4), true), DimensionError);
  }

  SUBCASE("rotation") {
    const Weight v = Weight::polynomial(1.0);
    const Weight r = v.rotated();
    CHECK(r(2, 5) == v(-5, 2));
    CHECK(r.rotated().rotated().rotated().id() == v.id());
    CHECK(r.id() == "poly(s=1)oj^-1");
  }
}

TEST_CASE("moderate weights") {
  const GroupCtx ctx(16);
  const ModerateWeight m = ModerateWeight::calibrated(ctx, Weight::polynomial(1.0), Weight::polynomial(2.0));
  CHECK(m.constant() == 1.0);
  CHECK(ModerateWeight::unweighted(ctx, Weight::polynomial(2.0)).constant() == 1.0);
  // Polynomial m dominating v: calibration finds a constant >= 1.
  const ModerateWeight big = ModerateWeight::calibrated(ctx, Weight::polynomial(2.0), Weight::polynomial(1.0));
  CHECK(big.constant() >= 1.0);
  CHECK_THROWS_AS(ModerateWeight(ctx, Weight::polynomial(3.0), Weight::constant(), 1.0), PreconditionError);
}

TEST_CASE("mixed_norm") {
  const GroupCtx ctx(24);
  const Lattice lat(ctx, 4, 3);
  const ModerateWeight unit = ModerateWeight::unweighted(ctx, Weight::constant());
  Rng rng(12);

  SUBCASE("delta") {
    const CoeffArray d = CoeffArray::delta(lat, lat.index(0, 0));
    for (double p : {1.0, 2.0, kInf})
      for (double q : {1.0, 2.0, kInf}) CHECK(mixed_norm(d, MixedNormSpec(p, q, unit)) == doctest::Approx(1.0));
    const ModerateWeight w = ModerateWeight::calibrated(ctx, Weight::polynomial(1.0), Weight::polynomial(1.0));
    const int idx = lat.index(1, 1);  // (4, 3), |z| = 5
    CHECK(mixed_norm(CoeffArray::delta(lat, idx), MixedNormSpec(1, 1, w)) == doctest::Approx(6.0));
  }

  SUBCASE("p = q = 2 is the l2 norm") {
    const CoeffArray c(lat, rng.complex_vector(lat.size()));
    CHECK(mixed_norm(c, MixedNormSpec(2, 2, unit)) == doctest::Approx(c.values().norm()));
  }

  SUBCASE("inner sum runs over time") {
    // Two entries at the same frequency index: l^{1,inf} adds them.
    CVector v = CVector::Zero(lat.size());
    v[lat.index(0, 0)] = 1.0;
    v[lat.index(1, 0)] = 1.0;
    const CoeffArray c(lat, v);
    CHECK(mixed_norm(c, MixedNormSpec(1, kInf, unit)) == doctest::Approx(2.0));
    CHECK(mixed_norm(c, MixedNormSpec(kInf, 1, unit)) == doctest::Approx(1.0));
  }

  SUBCASE("monotone in p and q") {
    const CoeffArray c(lat, rng.complex_vector(lat.size()));
    const double exps[] = {1.0, 1.5, 2.0, 4.0, kInf};
    for (int i = 0; i + 1 < 5; ++i) {
      CHECK(mixed_norm(c, MixedNormSpec(exps[i + 1], 2, unit)) <= mixed_norm(c, MixedNormSpec(exps[i], 2, unit)) * (1 + 1e-12));
      CHECK(mixed_norm(c, MixedNormSpec(2, exps[i + 1], unit)) <= mixed_norm(c, MixedNormSpec(2, exps[i], unit)) * (1 + 1e-12));
    }
  }

  SUBCASE("invalid exponents") {
    CHECK_THROWS_AS(MixedNormSpec(0.5, 1, unit), PreconditionError);
    CHECK_THROWS_AS(MixedNormSpec(1, std::nan(""), unit), PreconditionError);
  }

  SUBCASE("id") {
    const ModerateWeight w = ModerateWeight::calibrated(ctx, Weight::polynomial(2.0), Weight::polynomial(2.0));
    CHECK(MixedNormSpec(1, kInf, w).id() == "p=1,q=inf,m=poly(s=2)");
  }
}

TEST_CASE("mod_norm") {
  const GroupCtx ctx(48);
  const GaborSystem sys = build_system(periodized_gaussian(ctx), 4, 4);
  const ModerateWeight m = ModerateWeight::calibrated(ctx, Weight::polynomial(1.0), Weight::polynomial(1.0));
  const MixedNormSpec spec(1, 2, m);
  Rng rng(13);

  CHECK(mod_norm(Signal::zeros(ctx), sys, spec, Window::Primary) == 0.0);
  const Signal f = random_signal(ctx, rng);
  const Signal g = random_signal(ctx, rng);
  const double nf = mod_norm(f, sys, spec, Window::Primary);
  CHECK(mod_norm(Signal(ctx, Complex(0, 2) * f.values()), sys, spec, Window::Primary) == doctest::Approx(2 * nf));
  CHECK(mod_norm(Signal(ctx, f.values() + g.values()), sys, spec, Window::Primary) <=
        (nf + mod_norm(g, sys, spec, Window::Primary)) * (1 + 1e-12));

  // Different windows give equivalent norms.
  double lo = 1e300, hi = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Signal h = random_signal(ctx, rng);
    const double r = mod_norm(h, sys, spec, Window::Dual) / mod_norm(h, sys, spec, Window::Primary);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  MESSAGE("dual / primary ratio in [" << lo << ", " << hi << "]");
  CHECK(lo > 0.0);
  CHECK(hi / lo < 100.0);
}

TEST_CASE("young_bound_check") {
  const GroupCtx ctx(24);
  const Lattice lat(ctx, 4, 4);
  Rng rng(14);
  const Weight v = Weight::polynomial(2.0);
  const GaborMatrix m(lat, rng.complex_matrix(lat.size(), lat.size()));
  for (double p : {1.0, 2.0, kInf})
    for (double q : {1.0, kInf}) {
      for (const Weight& mw : {Weight::constant(), Weight::polynomial(1.0), Weight::polynomial(2.0)}) {
        const MixedNormSpec spec(p, q, ModerateWeight::calibrated(ctx, mw, v));
        const YoungReport r = young_bound_check(m, v, spec, 50, 3);
        CHECK(r.holds);
        CHECK(r.max_ratio <= r.bound);
        CHECK(r.trials == 50);
      }
    }
  // Identity attains its bound on a delta; the sampled ratio stays below.
  const MixedNormSpec spec(1, 1, ModerateWeight::unweighted(ctx, v));
  CHECK(young_bound_check(GaborMatrix::identity(lat), v, spec, 20, 1).max_ratio == doctest::Approx(1.0));
  CHECK_THROWS_AS(young_bound_check(m, Weight::constant(), spec, 5, 1), PreconditionError);
}

TEST_CASE("translate") {
  const GroupCtx ctx(24);
  const Lattice lat(ctx, 4, 3);
  Rng rng(15);
  const CoeffArray c(lat, rng.complex_vector(lat.size()));
  const CoeffArray t = translate(c, 2, 3);
  CHECK(t(2, 3) == c(0, 0));
  CHECK(t(1, 2) == c(-1, -1));
  // ||T_nu c|| <= C v(nu) ||c||.
  const Weight v = Weight::polynomial(2.0);
  const ModerateWeight m = ModerateWeight::calibrated(ctx, Weight::polynomial(2.0), v);
  for (int r = -3; r <= 3; ++r)
    for (int s = -3; s <= 3; ++s) {
      const MixedNormSpec spec(1, 2, m);
      const double bound = m.constant() * v.at(ctx, make_point(ctx, 4 * r, 3 * s)) * mixed_norm(c, spec);
      CHECK(mixed_norm(translate(c, r, s), spec) <= bound * (1 + 1e-12));
    }
}
