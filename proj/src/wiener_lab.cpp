#include "gaborlab/wiener_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gaborlab/random.hpp"

namespace gaborlab {
namespace {

constexpr double kZeroEigen = 1e-10;
constexpr double kContourGap = 1e-8;

double safe_ratio(double num, double den) { return den > 0.0 ? num / den : num; }

CMatrix inverse_checked(const CMatrix& a) {
  Eigen::BDCSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RVector& s = svd.singularValues();
  if (s.size() == 0 || !(s[s.size() - 1] > 1e-8 * s[0]))
    throw SingularityError("operator is not invertible: smallest singular value " +
                           std::to_string(s.size() ? s[s.size() - 1] : 0.0) + " is below 1e-8 * largest (" +
                           std::to_string(s.size() ? s[0] : 0.0) + ")");
  return svd.matrixV() * s.cwiseInverse().cast<Complex>().asDiagonal() * svd.matrixU().adjoint();
}

}  // namespace

double algebra_check(const Symbol& sigma, const Symbol& tau, const GaborSystem& sys) {
  sigma.ctx().require_odd("algebra_check");
  const Symbol product = twisted_product(sigma, tau, Calculus::Weyl);
  const GaborMatrix m_sigma = gabor_matrix(weyl_quantize(sigma), sys, Window::Tight);
  const GaborMatrix m_tau = gabor_matrix(weyl_quantize(tau), sys, Window::Tight);
  const GaborMatrix m_product = gabor_matrix(weyl_quantize(product), sys, Window::Tight);
  const double scale = m_sigma.values().norm() * m_tau.values().norm();
  const double diff = (m_product.values() - m_sigma.values() * m_tau.values()).norm();
  if (scale == 0.0) return diff == 0.0 ? 0.0 : diff;
  return diff / scale;
}

CMatrix pseudoinverse_svd(const CMatrix& m, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("pseudoinverse tolerance must be positive");
  Eigen::BDCSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RVector& s = svd.singularValues();
  RVector inv = RVector::Zero(s.size());
  const double cutoff = s.size() ? tol * s[0] : 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > cutoff) inv[i] = 1.0 / s[i];
  return svd.matrixV() * inv.cast<Complex>().asDiagonal() * svd.matrixU().adjoint();
}

GaborMatrix pseudoinverse_svd(const GaborMatrix& m, double tol) {
  return GaborMatrix(m.lattice(), pseudoinverse_svd(m.values(), tol));
}

CMatrix pseudoinverse_riesz(const CMatrix& m, const ContourSpec& contour) {
  if (m.rows() != m.cols()) throw DimensionError("pseudoinverse_riesz needs a square matrix");
  if (contour.points < 16) throw ContourError("contour needs at least 16 nodes");
  if (!(contour.radius > 0.0)) throw ContourError("contour radius must be positive");
  const double scale = m.norm();
  const double commutator = (m * m.adjoint() - m.adjoint() * m).norm();
  if (commutator > 1e-10 * std::max(scale * scale, 1e-300))
    throw PreconditionError("pseudoinverse_riesz needs a normal matrix (||AA* - A*A||_F = " +
                            std::to_string(commutator) + ")");

  if (std::abs(contour.center) < contour.radius + kContourGap)
    throw ContourError("contour must exclude 0 from its interior");
  Eigen::ComplexEigenSolver<CMatrix> eig(m, false);
  const Eigen::VectorXcd& lambda = eig.eigenvalues();
  const double largest = lambda.size() ? lambda.cwiseAbs().maxCoeff() : 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const double distance = std::abs(lambda[i] - contour.center);
    if (std::abs(distance - contour.radius) < kContourGap)
      throw ContourError("eigenvalue lies on the contour");
    const bool zero = std::abs(lambda[i]) <= kZeroEigen * largest;
    if (!zero && distance > contour.radius) throw ContourError("contour does not enclose every non-zero eigenvalue");
  }

  const Eigen::Index n = m.rows();
  CMatrix acc = CMatrix::Zero(n, n);
  const CMatrix identity = CMatrix::Identity(n, n);
  for (int k = 0; k < contour.points; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / contour.points;
    const Complex offset = contour.radius * Complex(std::cos(theta), std::sin(theta));
    const Complex z = contour.center + offset;
    // dz / (2 pi i) = offset dtheta / (2 pi); trapezoid weight 1 / points.
    const CMatrix resolvent = (z * identity - m).partialPivLu().inverse();
    acc += (offset / z) * resolvent;
  }
  return acc / static_cast<double>(contour.points);
}

GaborMatrix pseudoinverse_riesz(const GaborMatrix& m, const ContourSpec& contour) {
  return GaborMatrix(m.lattice(), pseudoinverse_riesz(m.values(), contour));
}

ContourSpec enclosing_contour(const CMatrix& hermitian_psd, int points) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(hermitian_psd, Eigen::EigenvaluesOnly);
  const RVector& lambda = eig.eigenvalues();
  const double top = lambda.maxCoeff();
  if (!(top > 0.0)) throw PreconditionError("matrix has no positive spectrum");
  double bottom = top;
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    if (lambda[i] > kZeroEigen * top) bottom = std::min(bottom, lambda[i]);
  return {Complex(0.5 * (bottom + top), 0.0), 0.5 * top + 0.25 * bottom, points};
}

double PenroseResiduals::max() const { return std::max({a_pinv_a, pinv_a_pinv, a_pinv_herm, pinv_a_herm}); }

PenroseResiduals penrose_residuals(const CMatrix& a, const CMatrix& pinv) {
  const CMatrix ap = a * pinv;
  const CMatrix pa = pinv * a;
  PenroseResiduals r;
  r.a_pinv_a = safe_ratio((ap * a - a).norm(), a.norm());
  r.pinv_a_pinv = safe_ratio((pa * pinv - pinv).norm(), pinv.norm());
  r.a_pinv_herm = safe_ratio((ap.adjoint() - ap).norm(), ap.norm());
  r.pinv_a_herm = safe_ratio((pa.adjoint() - pa).norm(), pa.norm());
  return r;
}

DecayFit fit_decay(const DecayProfile& h, double floor) {
  const Lattice& lat = h.lattice();
  const GroupCtx& ctx = lat.ctx();
  std::vector<double> xs;
  std::vector<double> ys;
  for (int mu = 0; mu < lat.size(); ++mu) {
    if (!(h[mu] > floor)) continue;
    const PhasePoint p = lat.point(mu);
    xs.push_back(std::hypot(static_cast<double>(ctx.signed_rep(p.x)), static_cast<double>(ctx.signed_rep(p.xi))));
    ys.push_back(std::log(h[mu]));
  }
  DecayFit fit;
  fit.points = static_cast<int>(xs.size());
  if (xs.size() < 2) return fit;
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) return fit;
  const double slope = sxy / sxx;
  fit.rate = -slope;
  fit.r2 = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;
  return fit;
}

double tail_ratio(const DecayProfile& h) {
  const Lattice& lat = h.lattice();
  const GroupCtx& ctx = lat.ctx();
  double far = -1.0;
  double far_value = 0.0;
  for (int mu = 0; mu < lat.size(); ++mu) {
    const PhasePoint p = lat.point(mu);
    const double r = std::hypot(static_cast<double>(ctx.signed_rep(p.x)), static_cast<double>(ctx.signed_rep(p.xi)));
    if (r > far + 1e-12) {
      far = r;
      far_value = h[mu];
    } else if (std::abs(r - far) <= 1e-12) {
      far_value = std::max(far_value, h[mu]);
    }
  }
  return safe_ratio(far_value, h[lat.index(0, 0)]);
}

double estimate_operator_norm(const GaborMatrix& m, const MixedNormSpec& spec, int trials, Rng& rng) {
  const Lattice& lat = m.lattice();
  double best = 0.0;
  for (int t = 0; t < trials; ++t) {
    const CoeffArray c(lat, rng.complex_vector(lat.size()));
    const double denom = mixed_norm(c, spec);
    if (denom > 0.0) best = std::max(best, mixed_norm(m.apply(c), spec) / denom);
  }
  return best;
}

WienerReport wiener_experiment(const Symbol& sigma, const GaborSystem& sys, const Weight& v,
                               const std::vector<MixedNormSpec>& specs, int trials, std::uint64_t seed) {
  const GroupCtx& ctx = sigma.ctx();
  require_same_group(ctx, sys.ctx(), "wiener_experiment");
  ctx.require_odd("wiener_experiment");
  const OperatorMatrix op = weyl_quantize(sigma);
  const OperatorMatrix inverse(ctx, inverse_checked(op.values()));
  Symbol tau = dequantize(inverse, Calculus::Weyl);

  const GaborMatrix m_sigma = gabor_matrix(op, sys, Window::Tight);
  const GaborMatrix m_tau = gabor_matrix(inverse, sys, Window::Tight);
  const CMatrix product = m_tau.values() * m_sigma.values();
  const CMatrix atoms = sys.atoms(Window::Tight);
  const CMatrix projection = atoms.adjoint() * atoms;

  Rng rng(seed);
  double pinv_residual = 0.0;
  for (int t = 0; t < std::max(trials / 10, 1); ++t) {
    const CoeffArray c = analyze(sys, random_signal(ctx, rng), Window::Tight);
    pinv_residual =
        std::max(pinv_residual, safe_ratio((product * c.values() - c.values()).norm(), c.values().norm()));
  }

  DecayProfile forward = decay_profile(m_sigma);
  DecayProfile backward = decay_profile(m_tau);
  WienerReport report{std::move(tau), forward, backward, 0.0, 0.0, {}, {}, 0.0, 0.0, 0.0, {}};
  report.forward_cv = cv_norm(forward, v);
  report.inverse_cv = cv_norm(backward, v);
  report.forward_fit = fit_decay(forward);
  report.inverse_fit = fit_decay(backward);
  report.pseudoinverse_residual = pinv_residual;
  report.projection_residual = safe_ratio((product - projection).norm(), projection.norm());
  report.tail_ratio = tail_ratio(backward);
  // Condition numbers of the action on ran C: random c = C f, and each
  // forward image d = M(sigma) c doubles as a probe for M(tau), which maps
  // it back to c. The product is then >= 1 by construction.
  for (const MixedNormSpec& spec : specs) {
    double fwd = 0.0;
    double inv = 0.0;
    for (int t = 0; t < trials; ++t) {
      const CVector c = analyze(sys, random_signal(ctx, rng), Window::Tight).values();
      const CVector d = m_sigma.values() * c;
      const CVector e = m_tau.values() * c;
      const double nc = mixed_norm(CoeffArray(sys.lattice(), c), spec);
      const double nd = mixed_norm(CoeffArray(sys.lattice(), d), spec);
      const double ne = mixed_norm(CoeffArray(sys.lattice(), e), spec);
      if (!(nc > 0.0)) continue;
      fwd = std::max(fwd, nd / nc);
      inv = std::max(inv, ne / nc);
      if (nd > 0.0) inv = std::max(inv, nc / nd);
    }
    report.condition_numbers[spec.id()] = fwd * inv;
  }
  return report;
}

BoundednessReport boundedness_report(const Symbol& sigma, const GaborSystem& sys, const Weight& v,
                                     const std::vector<MixedNormSpec>& specs, int trials, std::uint64_t seed,
                                     Calculus calculus) {
  const GaborMatrix m = gabor_matrix(quantize(sigma, calculus), sys, Window::Primary);
  BoundednessReport report;
  report.cv = cv_norm(m, v);
  Rng rng(seed);
  for (const MixedNormSpec& spec : specs) {
    if (spec.m().base().id() != v.id())
      throw PreconditionError("mixed norm " + spec.id() + " is not moderate with respect to " + v.id());
    BoundednessRow row;
    row.spec = spec.id();
    row.estimate = estimate_operator_norm(m, spec, trials, rng);
    row.bound = report.cv * spec.m().constant();
    row.ratio = safe_ratio(row.estimate, row.bound);
    if (row.estimate > row.bound * (1.0 + 1e-12)) report.holds = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

SpectralInvarianceReport spectral_invariance_check(const Symbol& sigma, const GaborSystem& sys,
                                                   const std::vector<MixedNormSpec>& specs, int trials,
                                                   std::uint64_t seed) {
  const WienerReport wiener = wiener_experiment(sigma, sys, Weight::constant(), {}, trials, seed);
  const GaborMatrix m_sigma = gabor_matrix(weyl_quantize(sigma), sys, Window::Tight);
  const GaborMatrix m_tau = gabor_matrix(weyl_quantize(wiener.inverse_symbol), sys, Window::Tight);
  SpectralInvarianceReport report;
  report.projection_residual = wiener.projection_residual;
  report.holds = report.projection_residual < 1e-8;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (const MixedNormSpec& spec : specs) {
    SpectralRow row;
    row.spec = spec.id();
    row.forward_norm = estimate_operator_norm(m_sigma, spec, trials, rng);
    row.inverse_norm = estimate_operator_norm(m_tau, spec, trials, rng);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace gaborlab
