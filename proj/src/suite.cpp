#include "gaborlab/suite.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "gaborlab/experiment.hpp"
#include "gaborlab/oracles.hpp"
#include "gaborlab/quantize.hpp"
#include "gaborlab/symbols.hpp"
#include "gaborlab/tf_core.hpp"
#include "gaborlab/wiener_lab.hpp"

namespace gaborlab {
namespace {

// Thresholds, pinned.
constexpr double kStftTol = 1e-10;
constexpr double kReconstructionTol = 1e-10;
constexpr double kFullLatticeTol = 1e-10;
constexpr double kIntertwiningTol = 1e-10;
constexpr double kFundamentalTol = 1e-10;
constexpr double kDiagramTol = 1e-10;
constexpr double kAlgebraTol = 1e-9;
constexpr double kSubmultSlack = 1e-12;
constexpr double kCvUnitTol = 1e-12;
constexpr double kYoungSlack = 1e-12;
constexpr double kRieszVsSvdTol = 1e-6;
constexpr double kPenroseTol = 1e-9;
constexpr double kProjectionTol = 1e-8;
constexpr double kTailTol = 1e-3;
constexpr double kR2Min = 0.9;
constexpr double kEquivalenceSpread = 100.0;
constexpr double kBaselineTol = 0.05;

// Criterion 12 runs with its own seed so the baselines do not move with the
// suite seed.
constexpr std::uint64_t kCalibrationSeed = 20240601;

// Measured once with kCalibrationSeed and frozen. Primary/dual mod-norm
// ratio intervals at N=48, a=b=4, m=v=(1+|z|), indexed by (p, q) in
// {1, 2, inf}^2 row-major.
constexpr double kBaselineR[9][2] = {
    {2.9804984843656213, 3.020602555265951},  {2.9799094442655583, 3.0218142728304236},
    {2.9571317638579164, 3.049837076643153},  {2.9815782481300226, 3.0183310479110848},
    {2.9809460028128707, 3.020063743124045},  {2.963182770420477, 3.0472770594861665},
    {2.9813421139608782, 3.0231075116395245}, {2.9786518876492223, 3.0238011486023573},
    {2.9562639172702516, 3.060816959352103},
};
// cv_norm(M(sigma^w), v) / sjostrand_norm(sigma, g, v o j^-1) at N=15, a=b=3.
constexpr double kBaselineC[2] = {0.006040015921146295, 0.006746068818638082};

const double kExps[3] = {1.0, 2.0, kInf};

Rng criterion_rng(std::uint64_t seed, int id) {
  return Rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(id));
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string exp_name(double p) { return std::isinf(p) ? "inf" : fmt(p); }

double rel(const CMatrix& a, const CMatrix& b) { return (a - b).norm() / b.norm(); }

bool within(double measured, double baseline) {
  return baseline > 0.0 && std::abs(measured - baseline) <= kBaselineTol * baseline;
}

CriterionResult begin(int id, std::string name) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

// ---- criteria ----------------------------------------------------------------

CriterionResult c1_stft(const SuiteOptions& o) {
  CriterionResult r = begin(1, "STFT oracle equivalence");
  const GroupCtx ctx(64);
  Rng rng = criterion_rng(o.seed, 1);
  const Signal f = random_signal(ctx, rng);
  const Signal g = random_signal(ctx, rng);
  const double dev = (stft(f, g).values() - oracles::stft_naive(f, g).values()).cwiseAbs().maxCoeff();
  r.metrics = Json{{"N", 64}, {"max_deviation", dev}, {"threshold", kStftTol}};
  r.pass = dev < kStftTol;
  r.detail = "max |FFT - naive| = " + fmt(dev);
  return r;
}

CriterionResult c2_reconstruction(const SuiteOptions& o) {
  CriterionResult r = begin(2, "frame reconstruction at N=144, a=b=12");
  r.known_unattainable = true;
  const GroupCtx ctx(144);
  const Signal g = periodized_gaussian(ctx);
  r.metrics = Json{{"N", 144}, {"a", 12}, {"b", 12}, {"threshold", kReconstructionTol}};
  try {
    const GaborSystem sys = build_system(g, 12, 12);
    Rng rng = criterion_rng(o.seed, 2);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const Signal f = random_signal(ctx, rng);
      for (auto [an, syn] : {std::pair{Window::Primary, Window::Dual}, std::pair{Window::Dual, Window::Primary},
                             std::pair{Window::Tight, Window::Tight}})
        worst = std::max(worst, (synthesize(sys, analyze(sys, f, an), syn).values() - f.values()).norm() / f.norm());
    }
    r.metrics["frame_bounds"] = Json{{"A", sys.bounds().lower}, {"B", sys.bounds().upper}};
    r.metrics["max_residual"] = worst;
    r.pass = worst < kReconstructionTol;
    r.detail = "max residual " + fmt(worst);
  } catch (const NotAFrameError& e) {
    // Independent look at the spectrum of S to document why.
    const CMatrix s = oracles::frame_operator_naive(g, 12, 12);
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<CMatrix>(s).eigenvalues();
    r.metrics["lambda_min"] = ev.minCoeff();
    r.metrics["lambda_max"] = ev.maxCoeff();
    r.metrics["error"] = e.what();
    r.pass = false;
    r.detail = "not a frame at critical density a*b=N: lambda_min/lambda_max = " + fmt(ev.minCoeff() / ev.maxCoeff());
  }
  return r;
}

CriterionResult c3_full_lattice(const SuiteOptions&) {
  CriterionResult r = begin(3, "full-lattice frame operator");
  const GroupCtx ctx(32);
  const Signal g = periodized_gaussian(ctx);
  const GaborSystem sys = build_system(g, 1, 1);
  const CMatrix& s = sys.frame_operator();
  const CMatrix expected = CMatrix::Identity(32, 32) * (32.0 * g.norm() * g.norm());
  const double res = (s - expected).norm() / s.norm();
  r.metrics = Json{{"N", 32}, {"relative_residual", res}, {"threshold", kFullLatticeTol}};
  r.pass = res < kFullLatticeTol;
  r.detail = "||S - N||g||^2 I||_F / ||S||_F = " + fmt(res);
  return r;
}

CriterionResult c4_intertwining(const SuiteOptions& o) {
  CriterionResult r = begin(4, "Wigner intertwining modulus");
  const int n = o.weyl_n.value_or(15);
  const GroupCtx ctx(n);
  const int h = ctx.inv2();
  Rng rng = criterion_rng(o.seed, 4);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const Signal f = random_signal(ctx, rng);
    const Signal g = random_signal(ctx, rng);
    const PhasePoint w = make_point(ctx, rng.below(n), rng.below(n));
    const PhasePoint z = make_point(ctx, rng.below(n), rng.below(n));
    const PhaseArray lhs = cross_wigner(tf_shift(f, w), tf_shift(g, z));
    const PhaseArray base = cross_wigner(f, g);
    const PhasePoint c = scale(ctx, h, add(ctx, w, z));
    for (int x = 0; x < n; ++x)
      for (int xi = 0; xi < n; ++xi)
        worst = std::max(worst, std::abs(std::abs(lhs(x, xi)) - std::abs(base(x - c.x, xi - c.xi))));
  }
  r.metrics = Json{{"N", n}, {"max_deviation", worst}, {"threshold", kIntertwiningTol}};
  r.pass = worst < kIntertwiningTol;
  r.detail = "max modulus deviation " + fmt(worst);
  return r;
}

CriterionResult c5_fundamental(const SuiteOptions& o) {
  CriterionResult r = begin(5, "fundamental identity |<sigma pi(z)g, pi(w)g>| = c'|V_Phi sigma|");
  const int n = o.weyl_n.value_or(15);
  const GroupCtx ctx(n);
  const JMap j = o.j ? o.j : JMap([](const GroupCtx& c, PhasePoint p) { return j_map(c, p); });
  const Signal g = periodized_gaussian(ctx);
  Rng rng = criterion_rng(o.seed, 5);
  std::vector<std::pair<double, double>> pairs;
  double rhs_max = 0.0;
  for (int s = 0; s < 5; ++s) {
    const Symbol sigma = white_symbol(ctx, rng);
    const SymbolSTFT vs = symbol_stft(sigma, g);
    const OperatorMatrix op = weyl_quantize(sigma);
    for (int t = 0; t < 200; ++t) {
      const PhasePoint z = make_point(ctx, rng.below(n), rng.below(n));
      const PhasePoint w = make_point(ctx, rng.below(n), rng.below(n));
      const double lhs = std::abs(inner(op.apply(tf_shift(g, z)), tf_shift(g, w)));
      const double rhs = std::abs(vs(scale(ctx, ctx.inv2(), add(ctx, w, z)), j(ctx, subtract(ctx, w, z))));
      pairs.emplace_back(lhs, rhs);
      rhs_max = std::max(rhs_max, rhs);
    }
  }
  double lo = kInf, hi = 0.0;
  int used = 0;
  for (const auto& [lhs, rhs] : pairs) {
    if (rhs <= 1e-8 * rhs_max) continue;
    ++used;
    lo = std::min(lo, lhs / rhs);
    hi = std::max(hi, lhs / rhs);
  }
  const double spread = hi > 0.0 ? (hi - lo) / hi : kInf;
  r.metrics = Json{{"N", n},      {"pairs", static_cast<int>(pairs.size())}, {"pairs_used", used},
                   {"c_prime_N", hi}, {"c_prime_N_times_N", hi * n},          {"relative_spread", spread},
                   {"threshold", kFundamentalTol}};
  r.pass = spread < kFundamentalTol;
  r.detail = "c'_N = " + fmt(hi) + " (N c'_N = " + fmt(hi * n) + "), relative spread " + fmt(spread);
  return r;
}

CriterionResult c6_diagram(const SuiteOptions& o) {
  CriterionResult r = begin(6, "diagram identity C_g T = M(T) C_gamma");
  const GroupCtx ctx(48);
  const GaborSystem sys = build_system(periodized_gaussian(ctx), 4, 4);
  Rng rng = criterion_rng(o.seed, 6);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const OperatorMatrix op(ctx, rng.complex_matrix(48, 48));
    worst = std::max(worst, diagram_check(op, sys, random_signal(ctx, rng)));
  }
  r.metrics = Json{{"N", 48}, {"max_residual", worst}, {"threshold", kDiagramTol}};
  r.pass = worst < kDiagramTol;
  r.detail = "max residual " + fmt(worst);
  return r;
}

CriterionResult c7_algebra(const SuiteOptions& o) {
  CriterionResult r = begin(7, "algebra identity M(sigma # tau) = M(sigma) M(tau)");
  const GroupCtx ctx(63);
  const GaborSystem sys = build_system(periodized_gaussian(ctx), 3, 3);
  const Weight v = Weight::polynomial(2.0);
  Rng rng = criterion_rng(o.seed, 7);
  double worst = 0.0;
  double worst_submult = 0.0;  // max cv(AB) / (cv(A) cv(B))
  for (int t = 0; t < 20; ++t) {
    const Symbol s = gaussian_envelope_symbol(ctx, 4.0, rng);
    const Symbol u = gaussian_envelope_symbol(ctx, 4.0, rng);
    worst = std::max(worst, algebra_check(s, u, sys));
    const GaborMatrix ms = gabor_matrix(weyl_quantize(s), sys, Window::Tight);
    const GaborMatrix mu = gabor_matrix(weyl_quantize(u), sys, Window::Tight);
    worst_submult = std::max(worst_submult, cv_norm(ms * mu, v) / (cv_norm(ms, v) * cv_norm(mu, v)));
  }
  const bool submult = worst_submult <= 1.0 + kSubmultSlack;
  r.metrics = Json{{"N", 63}, {"max_residual", worst}, {"threshold", kAlgebraTol},
                   {"max_cv_submultiplicativity_ratio", worst_submult}};
  r.pass = worst < kAlgebraTol && submult;
  r.detail = "max residual " + fmt(worst) + ", max cv(AB)/(cv(A)cv(B)) " + fmt(worst_submult);
  return r;
}

CriterionResult c8_cv_axioms(const SuiteOptions& o) {
  CriterionResult r = begin(8, "C_v norm axioms");
  const GroupCtx ctx(48);
  const Lattice lat(ctx, 4, 4);
  const Weight v = Weight::polynomial(2.0);
  const double id_norm = cv_norm(GaborMatrix::identity(lat), v);
  bool ok = std::abs(id_norm - 1.0) < kCvUnitTol;
  double shift_dev = 0.0;
  for (int s : {lat.index(1, 0), lat.index(0, 1), lat.index(3, 5), lat.index(11, 11), lat.index(6, 6)})
    shift_dev = std::max(shift_dev, std::abs(cv_norm(GaborMatrix::lattice_shift(lat, s), v) / v.at(ctx, lat.point(s)) - 1.0));
  ok = ok && shift_dev < kCvUnitTol;

  Rng rng = criterion_rng(o.seed, 8);
  auto banded = [&](int width) {
    CMatrix m = CMatrix::Zero(lat.size(), lat.size());
    for (int i = 0; i < lat.size(); ++i)
      for (int k = 0; k < lat.size(); ++k) {
        const PhasePoint d = lat.point(lat.difference(i, k));
        if (std::abs(ctx.signed_rep(d.x)) <= 4 * width && std::abs(ctx.signed_rep(d.xi)) <= 4 * width)
          m(i, k) = rng.complex_normal();
      }
    return GaborMatrix(lat, m);
  };
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const GaborMatrix a = banded(1 + t % 3);
    const GaborMatrix b = banded(1 + (t / 3) % 3);
    worst = std::max(worst, cv_norm(a * b, v) / (cv_norm(a, v) * cv_norm(b, v)));
  }
  ok = ok && worst <= 1.0 + kSubmultSlack;
  r.metrics = Json{{"identity_norm", id_norm}, {"max_shift_relative_deviation", shift_dev},
                   {"max_submultiplicativity_ratio", worst}};
  r.pass = ok;
  r.detail = "||I|| = " + fmt(id_norm) + ", max cv(AB)/(cv(A)cv(B)) over 100 banded pairs " + fmt(worst);
  return r;
}

CriterionResult c9_boundedness(const SuiteOptions& o) {
  CriterionResult r = begin(9, "boundedness on l^{p,q}_m");
  const GroupCtx ctx(48);
  const GaborSystem sys = build_system(periodized_gaussian(ctx), 4, 4);
  const Weight v = Weight::polynomial(2.0);
  Rng rng = criterion_rng(o.seed, 9);
  // N is even, so the symbol is quantized in the Kohn-Nirenberg calculus.
  const Symbol sigma = gaussian_envelope_symbol(ctx, 3.0, rng);
  std::vector<MixedNormSpec> specs;
  for (double p : kExps)
    for (double q : kExps) {
      specs.emplace_back(p, q, ModerateWeight::unweighted(ctx, v));
      specs.emplace_back(p, q, ModerateWeight::calibrated(ctx, Weight::polynomial(2.0), v));
    }
  const BoundednessReport rep = boundedness_report(sigma, sys, v, specs, 200, o.seed, Calculus::KohnNirenberg);
  double max_ratio = 0.0;
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    max_ratio = std::max(max_ratio, row.ratio);
    rows.push_back(Json{{"spec", row.spec}, {"estimate", row.estimate}, {"bound", row.bound}, {"ratio", row.ratio}});
  }
  r.metrics = Json{{"N", 48}, {"cv_norm", rep.cv}, {"max_ratio", max_ratio}, {"rows", rows}};
  r.pass = rep.holds && max_ratio <= 1.0 + kYoungSlack;
  r.detail = "max estimate/bound " + fmt(max_ratio) + " over " + std::to_string(rep.rows.size()) + " norms";
  return r;
}

CriterionResult c10_pseudoinverse(const SuiteOptions& o) {
  CriterionResult r = begin(10, "Riesz-contour vs SVD pseudoinverse");
  std::vector<std::pair<std::string, CMatrix>> cases;
  {
    const GroupCtx ctx(24);
    const GaborSystem sys = build_system(periodized_gaussian(ctx), 4, 4);
    const CMatrix a = sys.atoms(Window::Primary);
    cases.emplace_back("gram_primary", a.adjoint() * a);
    const CMatrix t = sys.atoms(Window::Tight);
    cases.emplace_back("gram_tight", t.adjoint() * t);
  }
  Rng rng = criterion_rng(o.seed, 10);
  for (int rank : {6, 12, 18, 30}) {
    const CMatrix q = Eigen::HouseholderQR<CMatrix>(rng.complex_matrix(36, 36)).householderQ();
    RVector lambda = RVector::Zero(36);
    for (int i = 0; i < rank; ++i) lambda[i] = 1.0 + 3.0 * rng.uniform();
    CMatrix m = q * lambda.cast<Complex>().asDiagonal() * q.adjoint();
    m = 0.5 * (m + m.adjoint()).eval();
    cases.emplace_back("random_rank_" + std::to_string(rank), m);
  }
  double worst_dev = 0.0;
  double worst_penrose = 0.0;
  Json rows = Json::array();
  for (const auto& [name, m] : cases) {
    const CMatrix riesz = pseudoinverse_riesz(m, enclosing_contour(m, 512));
    const CMatrix svd = pseudoinverse_svd(m, 1e-10);
    const double dev = rel(riesz, svd);
    const double pen = penrose_residuals(m, riesz).max();
    worst_dev = std::max(worst_dev, dev);
    worst_penrose = std::max(worst_penrose, pen);
    rows.push_back(Json{{"case", name}, {"riesz_vs_svd", dev}, {"penrose", pen}});
  }
  r.metrics = Json{{"K", 36}, {"nodes", 512}, {"max_riesz_vs_svd", worst_dev}, {"max_penrose", worst_penrose},
                   {"cases", rows}};
  r.pass = worst_dev < kRieszVsSvdTol && worst_penrose < kPenroseTol;
  r.detail = "max deviation " + fmt(worst_dev) + ", max Penrose residual " + fmt(worst_penrose);
  return r;
}

CriterionResult c11_wiener(const SuiteOptions& o) {
  CriterionResult r = begin(11, "Wiener experiment: inverse keeps off-diagonal decay");
  const GroupCtx ctx(105);
  const GaborSystem sys = build_system(periodized_gaussian(ctx), 5, 3);
  Rng rng = criterion_rng(o.seed, 11);
  const Symbol sigma = eps_perturbation_symbol(ctx, 0.3, 3.0, rng);
  const WienerReport rep = wiener_experiment(sigma, sys, Weight::polynomial(1.0), {}, 200, o.seed);
  r.metrics = Json{{"N", 105},
                   {"projection_residual", rep.projection_residual},
                   {"pseudoinverse_residual", rep.pseudoinverse_residual},
                   {"tail_ratio", rep.tail_ratio},
                   {"inverse_fit", Json{{"rate", rep.inverse_fit.rate}, {"r2", rep.inverse_fit.r2}}},
                   {"forward_fit", Json{{"rate", rep.forward_fit.rate}, {"r2", rep.forward_fit.r2}}},
                   {"forward_cv_norm", rep.forward_cv},
                   {"inverse_cv_norm", rep.inverse_cv}};
  r.pass = rep.projection_residual < kProjectionTol && rep.tail_ratio < kTailTol && rep.inverse_fit.r2 > kR2Min;
  r.detail = "projection residual " + fmt(rep.projection_residual) + ", tail " + fmt(rep.tail_ratio) + ", r2 " +
             fmt(rep.inverse_fit.r2);
  return r;
}

CriterionResult c12_equivalence(const SuiteOptions&) {
  CriterionResult r = begin(12, "norm-equivalence regression");
  bool ok = true;
  std::vector<std::string> drift;
  Json rows = Json::array();
  {
    const GroupCtx ctx(48);
    const GaborSystem sys = build_system(periodized_gaussian(ctx), 4, 4);
    const Weight v = Weight::polynomial(1.0);
    const ModerateWeight m = ModerateWeight::calibrated(ctx, Weight::polynomial(1.0), v);
    Rng rng = criterion_rng(kCalibrationSeed, 12);
    std::vector<Signal> fs;
    for (int t = 0; t < 100; ++t) fs.push_back(random_signal(ctx, rng));
    int idx = 0;
    for (double p : kExps)
      for (double q : kExps) {
        const MixedNormSpec spec(p, q, m);
        double lo = kInf, hi = 0.0;
        for (const Signal& f : fs) {
          const double ratio = mod_norm(f, sys, spec, Window::Primary) / mod_norm(f, sys, spec, Window::Dual);
          lo = std::min(lo, ratio);
          hi = std::max(hi, ratio);
        }
        const bool base_ok = within(lo, kBaselineR[idx][0]) && within(hi, kBaselineR[idx][1]);
        if (!base_ok) drift.push_back("r(" + exp_name(p) + "," + exp_name(q) + ")");
        ok = ok && hi / lo < kEquivalenceSpread && base_ok;
        rows.push_back(Json{{"p", exp_name(p)}, {"q", exp_name(q)}, {"r1", lo}, {"r2", hi}, {"spread", hi / lo},
                            {"baseline", Json::array({kBaselineR[idx][0], kBaselineR[idx][1]})}});
        ++idx;
      }
  }
  double c1 = kInf, c2 = 0.0;
  {
    const GroupCtx ctx(15);
    const Signal g = periodized_gaussian(ctx);
    const GaborSystem sys = build_system(g, 3, 3);
    const Weight v = Weight::polynomial(1.0);
    Rng rng = criterion_rng(kCalibrationSeed, 1012);
    for (int t = 0; t < 100; ++t) {
      const Symbol sigma = gaussian_envelope_symbol(ctx, 2.0, rng);
      const double ratio = cv_norm(gabor_matrix(weyl_quantize(sigma), sys), v) / sjostrand_norm(sigma, g, v.rotated());
      c1 = std::min(c1, ratio);
      c2 = std::max(c2, ratio);
    }
    const bool base_ok = within(c1, kBaselineC[0]) && within(c2, kBaselineC[1]);
    if (!base_ok) drift.push_back("c");
    ok = ok && c2 / c1 < kEquivalenceSpread && base_ok;
  }
  r.metrics = Json{{"calibration_seed", kCalibrationSeed},
                   {"modulation_ratios", rows},
                   {"matrix_symbol_ratio", Json{{"c1", c1}, {"c2", c2}, {"spread", c2 / c1},
                                                {"baseline", Json::array({kBaselineC[0], kBaselineC[1]})}}},
                   {"baseline_tolerance", kBaselineTol}};
  r.pass = ok;
  r.detail = "c in [" + fmt(c1) + ", " + fmt(c2) + "]";
  if (!drift.empty()) {
    r.detail += "; off baseline:";
    for (const auto& d : drift) r.detail += " " + d;
  }
  return r;
}

using CriterionFn = CriterionResult (*)(const SuiteOptions&);

const std::vector<CriterionFn>& battery() {
  static const std::vector<CriterionFn> fns{c1_stft,       c2_reconstruction, c3_full_lattice, c4_intertwining,
                                            c5_fundamental, c6_diagram,       c7_algebra,      c8_cv_axioms,
                                            c9_boundedness, c10_pseudoinverse, c11_wiener,     c12_equivalence};
  return fns;
}

bool selected(const SuiteOptions& o, int id) { return o.only.empty() || o.only.count(id) > 0; }

std::vector<CriterionResult> run_battery(const SuiteOptions& o) {
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < battery().size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected(o, id)) continue;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = battery()[i](o);
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      r.id = id;
      r.name = "criterion " + std::to_string(id);
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
      r.metrics = Json{{"error", e.what()}};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

Json battery_json(const SuiteOptions& o, const std::vector<CriterionResult>& rs) {
  Json j;
  j["library"] = "gaborlab";
  j["version"] = library_version();
  j["rng"] = Rng::kName;
  j["seed"] = o.seed;
  if (o.weyl_n) j["weyl_N"] = *o.weyl_n;
  Json list = Json::array();
  for (const auto& r : rs) {
    Json c{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"metrics", r.metrics}};
    if (r.known_unattainable) c["known_unattainable"] = true;
    list.push_back(std::move(c));
  }
  j["criteria"] = std::move(list);
  return j;
}

}  // namespace

bool SuiteReport::all_pass() const {
  for (const auto& c : criteria)
    if (!c.pass) return false;
  return true;
}

bool SuiteReport::only_known_failures() const {
  for (const auto& c : criteria)
    if (!c.pass && !c.known_unattainable) return false;
  return true;
}

SuiteReport run_suite(const SuiteOptions& options) {
  if (options.weyl_n) {
    const int n = *options.weyl_n;
    if (n % 2 == 0 || n % 3 != 0 || n > 32 || n < 3)
      throw ConfigError("group.N", "the suite's Weyl criteria need N odd, a multiple of 3 and at most 32; got " +
                                       std::to_string(n));
  }
  for (int id : options.only)
    if (id < 1 || id > 13) throw ConfigError("only", "criterion ids run from 1 to 13; got " + std::to_string(id));

  SuiteReport report;
  report.criteria = run_battery(options);
  Json summary = battery_json(options, report.criteria);

  if (selected(options, 13)) {
    // Criterion 13 reruns whatever else was selected and compares bytes.
    const auto start = std::chrono::steady_clock::now();
    const std::string first = to_json_text(summary);
    const std::string second = to_json_text(battery_json(options, run_battery(options)));
    CriterionResult r = begin(13, "determinism");
    r.pass = first == second;
    r.metrics = Json{{"bytes", static_cast<std::uint64_t>(first.size())}, {"identical", r.pass}};
    r.detail = r.pass ? "two runs gave byte-identical JSON (" + std::to_string(first.size()) + " bytes)"
                      : "JSON differs between two runs";
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.criteria.push_back(r);
    summary = battery_json(options, report.criteria);
  }
  Json failed = Json::array();
  for (const auto& c : report.criteria)
    if (!c.pass) failed.push_back(c.id);
  summary["failed"] = failed;
  summary["all_pass"] = report.all_pass();
  report.summary = std::move(summary);
  return report;
}

std::string criterion_line(const CriterionResult& r) {
  std::ostringstream os;
  char head[64];
  std::snprintf(head, sizeof head, "%s %2d  ", r.pass ? "PASS" : "FAIL", r.id);
  os << head << r.name << "  (" << fmt(r.seconds) << " s)  " << r.detail;
  if (!r.pass && r.known_unattainable) os << "  [known unattainable, see README]";
  return os.str();
}

}  // namespace gaborlab
