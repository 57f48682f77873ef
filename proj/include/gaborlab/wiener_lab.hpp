#pragma once

// Experiments on the matrix algebra side: composition of Gabor matrices,
// pseudoinverses, inverse-closedness and boundedness on the mixed-norm scale.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gaborlab/gabor_matrix.hpp"
#include "gaborlab/modspace.hpp"
#include "gaborlab/quantize.hpp"
#include "gaborlab/random.hpp"

namespace gaborlab {

// Circle |z - center| = radius discretized with `points` trapezoidal nodes.
struct ContourSpec {
  Complex center;
  double radius = 1.0;
  int points = 256;
};

// ||M(sigma # tau) - M(sigma) M(tau)||_F / (||M(sigma)||_F ||M(tau)||_F)
// with Weyl calculus and the tight window; 0 when both matrices vanish.
double algebra_check(const Symbol& sigma, const Symbol& tau, const GaborSystem& sys);

// Singular values below tol * sigma_max are treated as zero.
CMatrix pseudoinverse_svd(const CMatrix& m, double tol);
GaborMatrix pseudoinverse_svd(const GaborMatrix& m, double tol);

// (1 / 2 pi i) \oint z^{-1} (z I - A)^{-1} dz around the non-zero spectrum.
// A must be normal. Throws ContourError if 0 lies inside the circle, a
// non-zero eigenvalue lies outside, or any eigenvalue is within 1e-8 of it.
CMatrix pseudoinverse_riesz(const CMatrix& m, const ContourSpec& contour);
GaborMatrix pseudoinverse_riesz(const GaborMatrix& m, const ContourSpec& contour);

// Circle enclosing the positive spectrum of a Hermitian PSD matrix and
// excluding 0: center (lmin + lmax) / 2, radius lmax / 2 + lmin / 4, with
// lmin the smallest eigenvalue above 1e-10 * lmax.
ContourSpec enclosing_contour(const CMatrix& hermitian_psd, int points);

// Relative residuals of the four Penrose identities.
struct PenroseResiduals {
  double a_pinv_a = 0.0;      // ||A A+ A - A|| / ||A||
  double pinv_a_pinv = 0.0;   // ||A+ A A+ - A+|| / ||A+||
  double a_pinv_herm = 0.0;   // ||(A A+)^* - A A+|| / ||A A+||
  double pinv_a_herm = 0.0;   // ||(A+ A)^* - A+ A|| / ||A+ A||
  double max() const;
};
PenroseResiduals penrose_residuals(const CMatrix& a, const CMatrix& pinv);

// Least-squares line through (|mu|, log h(mu)) over h(mu) > floor.
struct DecayFit {
  double rate = 0.0;  // minus the slope
  double r2 = 0.0;
  int points = 0;
};
DecayFit fit_decay(const DecayProfile& h, double floor = 1e-14);

// h(mu_max) / h(0), mu_max the lattice point of largest |mu| (largest h on ties).
double tail_ratio(const DecayProfile& h);

// Operator norm estimate of M on l^{p,q}_m: max ratio over random arrays.
double estimate_operator_norm(const GaborMatrix& m, const MixedNormSpec& spec, int trials, Rng& rng);

struct WienerReport {
  Symbol inverse_symbol;  // tau with tau^w = (sigma^w)^{-1}
  DecayProfile forward_profile;
  DecayProfile inverse_profile;
  double forward_cv = 0.0;
  double inverse_cv = 0.0;
  DecayFit forward_fit;
  DecayFit inverse_fit;
  double pseudoinverse_residual = 0.0;  // max_f ||M(tau) M(sigma) C f - C f|| / ||C f||
  double projection_residual = 0.0;     // ||M(tau) M(sigma) - P||_F / ||P||_F
  double tail_ratio = 0.0;              // inverse profile
  // Estimated ||M(sigma)|| ||M(tau)|| restricted to ran C, by MixedNormSpec::id().
  std::map<std::string, double> condition_numbers;
};

// Inverts sigma^w (Weyl, odd N), builds M(sigma) and M(tau) with the tight
// window and reports decay diagnostics. Throws SingularityError if the
// smallest singular value of sigma^w is below 1e-8 times the largest.
WienerReport wiener_experiment(const Symbol& sigma, const GaborSystem& sys, const Weight& v,
                               const std::vector<MixedNormSpec>& specs = {}, int trials = 200,
                               std::uint64_t seed = 1);

struct BoundednessRow {
  std::string spec;
  double estimate = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
};

struct BoundednessReport {
  double cv = 0.0;
  std::vector<BoundednessRow> rows;
  bool holds = true;
};

// Estimated l^{p,q}_m norm of M(sigma) (primary window) against the bound
// cv_norm(M(sigma), v) C_m, for each spec.
BoundednessReport boundedness_report(const Symbol& sigma, const GaborSystem& sys, const Weight& v,
                                     const std::vector<MixedNormSpec>& specs, int trials = 200,
                                     std::uint64_t seed = 1, Calculus calculus = Calculus::Weyl);

struct SpectralRow {
  std::string spec;
  double forward_norm = 0.0;
  double inverse_norm = 0.0;
};

struct SpectralInvarianceReport {
  double projection_residual = 0.0;
  std::vector<SpectralRow> rows;
  bool holds = true;  // projection_residual < 1e-8
};

SpectralInvarianceReport spectral_invariance_check(const Symbol& sigma, const GaborSystem& sys,
                                                   const std::vector<MixedNormSpec>& specs, int trials = 200,
                                                   std::uint64_t seed = 1);

}  // namespace gaborlab
