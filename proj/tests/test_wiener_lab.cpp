#include "doctest.h"

#include <cmath>

#include "gaborlab/oracles.hpp"
#include "gaborlab/symbols.hpp"
#include "gaborlab/wiener_lab.hpp"

using namespace gaborlab;

namespace {

double rel(const CMatrix& a, const CMatrix& b) { return (a - b).norm() / b.norm(); }

CMatrix diag(std::initializer_list<double> d) {
  CVector v(static_cast<Eigen::Index>(d.size()));
  int i = 0;
  for (double x : d) v[i++] = x;
  return v.asDiagonal();
}

}  // namespace

TEST_CASE("algebra_check") {
  Rng rng(21);
  const GroupCtx ctx(63);
  const GaborSystem sys = build_system(periodized_gaussian(ctx), 3, 3);
  const Symbol one = Symbol::constant(ctx, 1.0);

  CHECK(algebra_check(gaussian_envelope_symbol(ctx, 3.0, rng), one, sys) < 1e-10);
  for (int trial = 0; trial < 3; ++trial) {
    const Symbol s = gaussian_envelope_symbol(ctx, 3.0, rng);
    const Symbol t = white_symbol(ctx, rng);
    CHECK(algebra_check(s, t, sys) < 1e-9);
  }
  CHECK(algebra_check(Symbol::zeros(ctx), Symbol::zeros(ctx), sys) == 0.0);
  CHECK_THROWS_AS(algebra_check(one, Symbol::constant(GroupCtx(15), 1.0), sys), DimensionError);
}

TEST_CASE("pseudoinverse_svd") {
  SUBCASE("diagonal with a zero") {
    const CMatrix p = pseudoinverse_svd(diag({2, 0, 1}), 1e-12);
    CHECK((p - diag({0.5, 0, 1})).norm() < 1e-14);
  }
  SUBCASE("invertible") {
    Rng rng(22);
    const CMatrix a = rng.complex_matrix(10, 10);
    CHECK(rel(pseudoinverse_svd(a, 1e-12), a.inverse()) < 1e-10);
  }
  SUBCASE("rank deficient: Penrose identities") {
    Rng rng(23);
    const CMatrix a = rng.complex_matrix(12, 4) * rng.complex_matrix(4, 12);
    CHECK(penrose_residuals(a, pseudoinverse_svd(a, 1e-10)).max() < 1e-10);
  }
  SUBCASE("bad tolerance") { CHECK_THROWS_AS(pseudoinverse_svd(diag({1}), 0.0), PreconditionError); }
}

TEST_CASE("pseudoinverse_riesz") {
  SUBCASE("invertible diagonal") {
    const CMatrix p = pseudoinverse_riesz(diag({2, 1}), {Complex(1.5, 0), 1.0, 256});
    CHECK((p - diag({0.5, 1.0})).norm() < 1e-12);
  }
  SUBCASE("singular diagonal") {
    const CMatrix p = pseudoinverse_riesz(diag({1, 0}), {Complex(1.0, 0), 0.5, 256});
    CHECK((p - diag({1, 0})).norm() < 1e-12);
  }
  SUBCASE("PSD Gram matrix agrees with the SVD route") {
    const GroupCtx ctx(24);
    const GaborSystem sys = build_system(periodized_gaussian(ctx), 4, 4);
    const CMatrix atoms = sys.atoms(Window::Primary);
    const CMatrix gram = atoms.adjoint() * atoms;
    REQUIRE(gram.rows() == 36);
    const CMatrix riesz = pseudoinverse_riesz(gram, enclosing_contour(gram, 256));
    const CMatrix svd = pseudoinverse_svd(gram, 1e-10);
    CHECK(rel(riesz, svd) < 1e-6);
    CHECK(penrose_residuals(gram, riesz).max() < 1e-6);
  }
  SUBCASE("contour errors") {
    // 0 inside the circle.
    CHECK_THROWS_AS(pseudoinverse_riesz(diag({1, 0}), {Complex(0.2, 0), 1.0, 256}), ContourError);
    // Non-zero eigenvalue outside.
    CHECK_THROWS_AS(pseudoinverse_riesz(diag({2, 5}), {Complex(2, 0), 1.0, 256}), ContourError);
    // Eigenvalue on the circle.
    CHECK_THROWS_AS(pseudoinverse_riesz(diag({2, 1}), {Complex(2, 0), 1.0, 256}), ContourError);
    CHECK_THROWS_AS(pseudoinverse_riesz(diag({2, 1}), {Complex(1.5, 0), 1.0, 8}), ContourError);
  }
  SUBCASE("non-normal input") {
    CMatrix a(2, 2);
    a << 1, 1, 0, 1;
    CHECK_THROWS_AS(pseudoinverse_riesz(a, {Complex(1, 0), 0.5, 256}), PreconditionError);
  }
}

TEST_CASE("fit_decay and tail_ratio") {
  const GroupCtx ctx(24);
  const Lattice lat(ctx, 4, 4);
  RVector h(lat.size());
  for (int mu = 0; mu < lat.size(); ++mu) {
    const PhasePoint p = lat.point(mu);
    h[mu] = std::exp(-0.5 * std::hypot(ctx.signed_rep(p.x), ctx.signed_rep(p.xi)));
  }
  const DecayProfile profile(lat, h);
  const DecayFit fit = fit_decay(profile);
  CHECK(fit.rate == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(fit.points == lat.size());
  // Largest |mu| is (-12, -12).
  CHECK(tail_ratio(profile) == doctest::Approx(std::exp(-0.5 * std::hypot(12.0, 12.0))));
}

TEST_CASE("wiener_experiment") {
  SUBCASE("constant symbol inverts to its reciprocal") {
    const GroupCtx ctx(15);
    const GaborSystem sys = build_system(periodized_gaussian(ctx), 3, 3);
    const WienerReport r = wiener_experiment(Symbol::constant(ctx, 2.0), sys, Weight::polynomial(1.0));
    CHECK((r.inverse_symbol.values() - CMatrix::Constant(15, 15, 0.5)).norm() < 1e-12);
    CHECK(r.projection_residual < 1e-10);
    CHECK(r.pseudoinverse_residual < 1e-10);
  }

  SUBCASE("small perturbation of the identity") {
    const GroupCtx ctx(105);
    const GaborSystem sys = build_system(periodized_gaussian(ctx), 5, 3);
    Rng rng(24);
    const Symbol sigma = eps_perturbation_symbol(ctx, 0.3, 3.0, rng);
    const ModerateWeight m = ModerateWeight::unweighted(ctx, Weight::polynomial(1.0));
    const WienerReport r = wiener_experiment(sigma, sys, Weight::polynomial(1.0), {MixedNormSpec(1, 1, m)}, 20, 5);

    // Independent inverse: Neumann series of I + X with ||X|| = 0.3.
    const CMatrix x = weyl_quantize(sigma).values() - CMatrix::Identity(105, 105);
    const CMatrix neumann = oracles::neumann_inverse(x, 40);
    CHECK(rel(weyl_quantize(r.inverse_symbol).values(), neumann) < 1e-12);

    CHECK(r.projection_residual < 1e-10);
    CHECK(r.pseudoinverse_residual < 1e-10);
    CHECK(r.inverse_fit.r2 > 0.9);
    CHECK(r.tail_ratio < 1e-3);
    CHECK(r.condition_numbers.size() == 1);
    CHECK(r.condition_numbers.begin()->second >= 1.0 - 1e-9);
    MESSAGE("inverse decay rate " << r.inverse_fit.rate << ", r2 " << r.inverse_fit.r2 << ", tail " << r.tail_ratio);
  }

  SUBCASE("singular symbol") {
    const GroupCtx ctx(15);
    const GaborSystem sys = build_system(periodized_gaussian(ctx), 3, 3);
    CHECK_THROWS_AS(wiener_experiment(Symbol::zeros(ctx), sys, Weight::constant()), SingularityError);
    // Multiplication by a function vanishing at one point.
    CMatrix v = CMatrix::Ones(15, 15);
    v.row(4).setZero();
    CHECK_THROWS_AS(wiener_experiment(Symbol(ctx, v), sys, Weight::constant()), PreconditionError);
  }

  SUBCASE("even N") {
    const GroupCtx ctx(16);
    const GaborSystem sys = build_system(periodized_gaussian(ctx), 2, 2);
    CHECK_THROWS_AS(wiener_experiment(Symbol::constant(ctx, 1.0), sys, Weight::constant()), ParityError);
  }
}

TEST_CASE("boundedness_report") {
  const GroupCtx ctx(48);
  const GaborSystem sys = build_system(periodized_gaussian(ctx), 4, 4);
  Rng rng(25);
  const Symbol sigma = gaussian_envelope_symbol(ctx, 3.0, rng);
  const Weight v = Weight::polynomial(2.0);
  std::vector<MixedNormSpec> specs;
  for (double p : {1.0, 2.0, kInf})
    for (double q : {1.0, kInf})
      for (const Weight& m : {Weight::constant(), Weight::polynomial(2.0)})
        specs.emplace_back(p, q, ModerateWeight::calibrated(ctx, m, v));
  const BoundednessReport r = boundedness_report(sigma, sys, v, specs, 30, 2, Calculus::KohnNirenberg);
  CHECK(r.holds);
  CHECK(r.rows.size() == specs.size());
  for (const auto& row : r.rows) CHECK(row.ratio <= 1.0 + 1e-12);
  const std::vector<MixedNormSpec> wrong{MixedNormSpec(1, 1, ModerateWeight::unweighted(ctx, Weight::constant()))};
  CHECK_THROWS_AS(boundedness_report(sigma, sys, v, wrong, 5, 1, Calculus::KohnNirenberg), PreconditionError);
}

TEST_CASE("spectral_invariance_check") {
  const GroupCtx ctx(63);
  const GaborSystem sys = build_system(periodized_gaussian(ctx), 3, 3);
  Rng rng(26);
  const Symbol sigma = eps_perturbation_symbol(ctx, 0.5, 3.0, rng);
  const ModerateWeight m = ModerateWeight::unweighted(ctx, Weight::constant());
  const SpectralInvarianceReport r = spectral_invariance_check(sigma, sys, {MixedNormSpec(1, kInf, m)}, 20, 3);
  CHECK(r.holds);
  REQUIRE(r.rows.size() == 1);
  CHECK(std::isfinite(r.rows[0].inverse_norm));
}

TEST_CASE("kernel of M(tau) contains the complement of the coefficient range") {
  const GroupCtx ctx(15);
  const GaborSystem sys = build_system(periodized_gaussian(ctx), 3, 3);
  Rng rng(27);
  const Symbol sigma = eps_perturbation_symbol(ctx, 0.4, 2.0, rng);
  const WienerReport r = wiener_experiment(sigma, sys, Weight::constant());
  const GaborMatrix m_tau = gabor_matrix(weyl_quantize(r.inverse_symbol), sys, Window::Tight);
  const CMatrix atoms = sys.atoms(Window::Tight);
  const CMatrix p = atoms.adjoint() * atoms;
  for (int trial = 0; trial < 5; ++trial) {
    const CVector c = rng.complex_vector(p.rows());
    const CVector perp = c - p * c;  // orthogonal to ran C
    CHECK((m_tau.values() * perp).norm() < 1e-10 * perp.norm());
  }
}
