#include "gaborlab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "gaborlab/oracles.hpp"
#include "gaborlab/quantize.hpp"
#include "gaborlab/suite.hpp"
#include "gaborlab/symbols.hpp"
#include "gaborlab/tf_core.hpp"
#include "gaborlab/wiener_lab.hpp"

#ifndef GABORLAB_VERSION
#define GABORLAB_VERSION "unknown"
#endif

namespace gaborlab {

std::string library_version() { return GABORLAB_VERSION; }

namespace {

const std::map<std::string, ExperimentKind>& kind_names() {
  static const std::map<std::string, ExperimentKind> names{
      {"Stft", ExperimentKind::Stft},         {"GaborInfo", ExperimentKind::GaborInfo},
      {"Quantize", ExperimentKind::Quantize}, {"GaborMatrix", ExperimentKind::GaborMatrix},
      {"Decay", ExperimentKind::Decay},       {"Algebra", ExperimentKind::Algebra},
      {"Wiener", ExperimentKind::Wiener},     {"Bounds", ExperimentKind::Bounds},
      {"Suite", ExperimentKind::Suite}};
  return names;
}

bool needs_lattice(ExperimentKind k) {
  return k != ExperimentKind::Stft && k != ExperimentKind::Quantize && k != ExperimentKind::Suite;
}

bool needs_odd(ExperimentKind k) { return k == ExperimentKind::Algebra || k == ExperimentKind::Wiener; }

// ---- field readers ----------------------------------------------------------

double number(const Json& j, const std::string& field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "Infinity") return kInf;
  }
  throw ConfigError(field, "expected a number");
}

long long integer(const Json& j, const std::string& field) {
  if (j.is_number_integer() || j.is_number_unsigned()) return j.get<long long>();
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (std::floor(d) == d && std::abs(d) < 9e15) return static_cast<long long>(d);
  }
  throw ConfigError(field, "expected an integer");
}

Complex complex_value(const Json& j, const std::string& field) {
  if (j.is_array()) {
    if (j.size() != 2) throw ConfigError(field, "complex values are [re, im]");
    return {number(j[0], field + "[0]"), number(j[1], field + "[1]")};
  }
  return {number(j, field), 0.0};
}

const Json& require(const Json& obj, const std::string& key, const std::string& field) {
  if (!obj.is_object() || !obj.contains(key)) throw ConfigError(field, "missing");
  return obj.at(key);
}

void reject_unknown(const Json& obj, std::initializer_list<const char*> known, const std::string& prefix) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(known.begin(), known.end(), [&](const char* k) { return it.key() == k; }))
      throw ConfigError(prefix.empty() ? it.key() : prefix + "." + it.key(), "unknown field");
  }
}

WeightConfig parse_weight(const Json& j, const std::string& field) {
  if (!j.is_object()) throw ConfigError(field, "expected an object with a \"kind\"");
  WeightConfig w;
  const Json& kind = require(j, "kind", field + ".kind");
  const std::string k = kind.is_string() ? kind.get<std::string>() : "";
  if (k == "constant") {
    reject_unknown(j, {"kind"}, field);
    w.kind = Weight::Kind::Constant;
  } else if (k == "polynomial") {
    reject_unknown(j, {"kind", "s"}, field);
    w.kind = Weight::Kind::Polynomial;
    w.s = number(require(j, "s", field + ".s"), field + ".s");
    if (!(w.s >= 0.0) || !std::isfinite(w.s)) throw ConfigError(field + ".s", "must be finite and >= 0");
  } else if (k == "subexponential") {
    reject_unknown(j, {"kind", "a", "b"}, field);
    w.kind = Weight::Kind::Subexponential;
    w.a = number(require(j, "a", field + ".a"), field + ".a");
    w.b = number(require(j, "b", field + ".b"), field + ".b");
    if (!(w.a >= 0.0) || !std::isfinite(w.a)) throw ConfigError(field + ".a", "must be finite and >= 0");
    if (!(w.b >= 0.0 && w.b < 1.0))
      throw ConfigError(field + ".b", "must lie in [0, 1); the exponential weight is only available as a custom table");
  } else if (k == "custom") {
    reject_unknown(j, {"kind", "table", "grs"}, field);
    w.kind = Weight::Kind::Custom;
    const Json& t = require(j, "table", field + ".table");
    if (!t.is_array() || t.empty()) throw ConfigError(field + ".table", "expected an N x N array");
    const auto rows = static_cast<Eigen::Index>(t.size());
    w.table.resize(rows, rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const std::string rf = field + ".table[" + std::to_string(r) + "]";
      if (!t[r].is_array() || static_cast<Eigen::Index>(t[r].size()) != rows)
        throw ConfigError(rf, "expected a row of length " + std::to_string(rows));
      for (Eigen::Index c = 0; c < rows; ++c) w.table(r, c) = number(t[r][c], rf);
    }
    if (j.contains("grs")) {
      if (!j.at("grs").is_boolean()) throw ConfigError(field + ".grs", "expected true or false");
      w.grs = j.at("grs").get<bool>();
    }
  } else {
    throw ConfigError(field + ".kind", "expected one of constant, polynomial, subexponential, custom");
  }
  return w;
}

SymbolConfig parse_symbol(const Json& j, int n) {
  const std::string field = "symbol";
  if (!j.is_object()) throw ConfigError(field, "expected an object with a \"kind\"");
  SymbolConfig s;
  const Json& kind = require(j, "kind", "symbol.kind");
  const std::string k = kind.is_string() ? kind.get<std::string>() : "";
  if (k == "Constant") {
    reject_unknown(j, {"kind", "c"}, field);
    s.kind = SymbolConfig::Kind::Constant;
    s.c = complex_value(require(j, "c", "symbol.c"), "symbol.c");
  } else if (k == "EpsPerturbation") {
    reject_unknown(j, {"kind", "eps", "width"}, field);
    s.kind = SymbolConfig::Kind::EpsPerturbation;
    s.eps = number(require(j, "eps", "symbol.eps"), "symbol.eps");
    s.width = number(require(j, "width", "symbol.width"), "symbol.width");
    if (!(std::abs(s.eps) < 1.0)) throw ConfigError("symbol.eps", "must satisfy |eps| < 1");
    if (!(s.width > 0.0) || !std::isfinite(s.width)) throw ConfigError("symbol.width", "must be positive");
  } else if (k == "Random") {
    reject_unknown(j, {"kind", "band"}, field);
    s.kind = SymbolConfig::Kind::Random;
    s.band = static_cast<int>(integer(require(j, "band", "symbol.band"), "symbol.band"));
    if (s.band < 0) throw ConfigError("symbol.band", "must be >= 0");
  } else if (k == "Table") {
    reject_unknown(j, {"kind", "re", "im"}, field);
    s.kind = SymbolConfig::Kind::Table;
    s.table = CMatrix::Zero(n, n);
    for (const char* part : {"re", "im"}) {
      const std::string pf = std::string("symbol.") + part;
      if (!j.contains(part)) {
        if (std::string(part) == "re") throw ConfigError(pf, "missing");
        continue;
      }
      const Json& t = j.at(part);
      if (!t.is_array() || static_cast<int>(t.size()) != n)
        throw ConfigError(pf, "expected " + std::to_string(n) + " rows (group.N)");
      for (int r = 0; r < n; ++r) {
        const std::string rf = pf + "[" + std::to_string(r) + "]";
        if (!t[r].is_array() || static_cast<int>(t[r].size()) != n)
          throw ConfigError(rf, "expected a row of length " + std::to_string(n));
        for (int c = 0; c < n; ++c) {
          const double v = number(t[r][c], rf);
          if (!std::isfinite(v)) throw ConfigError(rf, "entries must be finite");
          if (std::string(part) == "re")
            s.table(r, c) += v;
          else
            s.table(r, c) += Complex(0.0, v);
        }
      }
    }
  } else {
    throw ConfigError("symbol.kind", "expected one of Constant, EpsPerturbation, Random, Table");
  }
  return s;
}

NormConfig parse_norm(const Json& j, const std::string& field) {
  if (!j.is_object()) throw ConfigError(field, "expected {p, q, weight}");
  reject_unknown(j, {"p", "q", "weight"}, field);
  NormConfig nc;
  nc.p = number(require(j, "p", field + ".p"), field + ".p");
  nc.q = number(require(j, "q", field + ".q"), field + ".q");
  if (!(nc.p >= 1.0)) throw ConfigError(field + ".p", "must lie in [1, inf]");
  if (!(nc.q >= 1.0)) throw ConfigError(field + ".q", "must lie in [1, inf]");
  if (j.contains("weight")) {
    const Json& w = j.at("weight");
    if (w.is_string() && w.get<std::string>() == "v") {
      nc.ref = NormConfig::Ref::Base;
    } else if ((w.is_string() && w.get<std::string>() == "1") || (w.is_number() && w.get<double>() == 1.0)) {
      nc.ref = NormConfig::Ref::Unit;
    } else {
      nc.ref = NormConfig::Ref::Explicit;
      nc.m = parse_weight(w, field + ".weight");
    }
  }
  return nc;
}

// ---- building library objects ----------------------------------------------

Signal make_window(const ExperimentConfig& cfg, const GroupCtx& ctx) {
  if (cfg.window) return Signal(ctx, *cfg.window);
  return periodized_gaussian(ctx);
}

Symbol make_symbol(const SymbolConfig& s, const GroupCtx& ctx, Rng& rng) {
  switch (s.kind) {
    case SymbolConfig::Kind::Constant:
      return Symbol::constant(ctx, s.c);
    case SymbolConfig::Kind::EpsPerturbation:
      return eps_perturbation_symbol(ctx, s.eps, s.width, rng);
    case SymbolConfig::Kind::Random:
      return random_band_symbol(ctx, s.band, rng);
    case SymbolConfig::Kind::Table:
      return Symbol(ctx, s.table);
  }
  return Symbol::zeros(ctx);
}

std::vector<MixedNormSpec> make_specs(const ExperimentConfig& cfg, const GroupCtx& ctx, const Weight& v) {
  std::vector<MixedNormSpec> specs;
  for (const NormConfig& nc : cfg.norms) {
    switch (nc.ref) {
      case NormConfig::Ref::Base:
        specs.emplace_back(nc.p, nc.q, ModerateWeight::calibrated(ctx, v, v));
        break;
      case NormConfig::Ref::Unit:
        specs.emplace_back(nc.p, nc.q, ModerateWeight::unweighted(ctx, v));
        break;
      case NormConfig::Ref::Explicit:
        specs.emplace_back(nc.p, nc.q, ModerateWeight::calibrated(ctx, build_weight(ctx, nc.m), v));
        break;
    }
  }
  return specs;
}

Calculus calculus_for(const GroupCtx& ctx) { return ctx.is_odd() ? Calculus::Weyl : Calculus::KohnNirenberg; }

std::string calculus_name(Calculus c) { return c == Calculus::Weyl ? "Weyl" : "KohnNirenberg"; }

Json fit_json(const DecayFit& f) { return Json{{"rate", f.rate}, {"r2", f.r2}, {"points", f.points}}; }

// Collects named checks and artifacts while an experiment runs.
class Recorder {
 public:
  void check(const std::string& name, double value, double threshold) {
    const bool ok = value < threshold;
    checks_.push_back(Json{{"name", name}, {"value", value}, {"threshold", threshold}, {"pass", ok}});
    if (!ok) failed_.push_back(name);
  }
  void check_flag(const std::string& name, bool ok) {
    checks_.push_back(Json{{"name", name}, {"pass", ok}});
    if (!ok) failed_.push_back(name);
  }
  void artifact(const std::string& name, std::string text) { artifacts_.emplace_back(name, std::move(text)); }

  Json checks() const { return checks_; }
  const std::vector<std::string>& failed() const { return failed_; }
  const std::vector<std::pair<std::string, std::string>>& artifacts() const { return artifacts_; }

 private:
  Json checks_ = Json::array();
  std::vector<std::string> failed_;
  std::vector<std::pair<std::string, std::string>> artifacts_;
};

// ---- experiments --------------------------------------------------------------

Json run_stft(const ExperimentConfig& cfg, const GroupCtx& ctx, Rng& rng, Recorder& rec) {
  const Signal g = make_window(cfg, ctx);
  const Signal f = random_signal(ctx, rng);
  const PhaseArray v = stft(f, g);
  const double energy = v.values().squaredNorm();
  const double expected = ctx.n() * f.norm() * f.norm() * g.norm() * g.norm();
  Json out{{"stft_norm", std::sqrt(energy)}, {"parseval_residual", std::abs(energy - expected) / expected}};
  rec.check("parseval_residual", out["parseval_residual"].get<double>(), 1e-12);
  if (ctx.n() <= 256) {
    const double dev = (v.values() - oracles::stft_naive(f, g).values()).cwiseAbs().maxCoeff();
    out["oracle_max_deviation"] = dev;
    rec.check("oracle_max_deviation", dev, 1e-10);
  }
  rec.artifact("stft.csv", matrix_csv(v.values()));
  return out;
}

Json run_gabor_info(const ExperimentConfig& cfg, const GroupCtx& ctx, Rng& rng, Recorder& rec) {
  const GaborSystem sys = build_system(make_window(cfg, ctx), *cfg.a, *cfg.b);
  const FrameBounds fb = sys.bounds();
  double res[3] = {0.0, 0.0, 0.0};
  const int trials = std::min(cfg.trials, 100);
  for (int t = 0; t < trials; ++t) {
    const Signal f = random_signal(ctx, rng);
    const std::pair<Window, Window> routes[3] = {
        {Window::Primary, Window::Dual}, {Window::Dual, Window::Primary}, {Window::Tight, Window::Tight}};
    for (int r = 0; r < 3; ++r) {
      const Signal back = synthesize(sys, analyze(sys, f, routes[r].first), routes[r].second);
      res[r] = std::max(res[r], (back.values() - f.values()).norm() / f.norm());
    }
  }
  const double worst = std::max({res[0], res[1], res[2]});
  Json out{{"lattice_size", sys.lattice().size()},
           {"redundancy", static_cast<double>(sys.lattice().size()) / ctx.n()},
           {"frame_bounds", Json{{"A", fb.lower}, {"B", fb.upper}}},
           {"reconstruction_residual", worst},
           {"reconstruction_residuals",
            Json{{"analysis_primary_synthesis_dual", res[0]},
                 {"analysis_dual_synthesis_primary", res[1]},
                 {"tight", res[2]}}},
           {"trials", trials}};
  rec.check("reconstruction_residual", worst, 1e-10);
  CMatrix windows(ctx.n(), 3);
  windows << sys.primary().values(), sys.dual().values(), sys.tight().values();
  rec.artifact("windows.csv", matrix_csv(windows));
  return out;
}

Json run_quantize(const ExperimentConfig& cfg, const GroupCtx& ctx, Rng& rng, Recorder& rec) {
  const Calculus calc = calculus_for(ctx);
  const Symbol sigma = make_symbol(cfg.symbol, ctx, rng);
  const OperatorMatrix op = quantize(sigma, calc);
  const Symbol back = dequantize(op, calc);
  const double scale = sigma.values().norm();
  const double round_trip = (back.values() - sigma.values()).norm() / (scale > 0 ? scale : 1.0);
  Json out{{"calculus", calculus_name(calc)}, {"operator_norm", operator_norm(op.values())},
           {"round_trip_residual", round_trip}};
  rec.check("round_trip_residual", round_trip, 1e-10);
  if (ctx.is_odd()) {
    // <sigma^w f, h> / <sigma, W(h, f)> on random inputs.
    std::vector<Complex> ratios;
    for (int t = 0; t < std::min(cfg.trials, 50); ++t) {
      const Symbol s = white_symbol(ctx, rng);
      const Signal f = random_signal(ctx, rng);
      const Signal h = random_signal(ctx, rng);
      const Complex lhs = inner(weyl_quantize(s).apply(f), h);
      const Complex pairing = cross_wigner(h, f).values().conjugate().cwiseProduct(s.values()).sum();
      ratios.push_back(lhs / pairing);
    }
    double spread = 0.0;
    for (const Complex& r : ratios) spread = std::max(spread, std::abs(r - ratios.front()));
    out["c_N"] = ratios.front().real();
    out["c_N_imag"] = ratios.front().imag();
    out["c_N_times_N"] = ratios.front().real() * ctx.n();
    out["c_N_spread"] = spread;
    rec.check("c_N_spread", spread, 1e-12);
  }
  rec.artifact("operator.csv", matrix_csv(op.values()));
  return out;
}

Json run_gabor_matrix(const ExperimentConfig& cfg, const GroupCtx& ctx, Rng& rng, Recorder& rec) {
  const Signal g = make_window(cfg, ctx);
  const GaborSystem sys = build_system(g, *cfg.a, *cfg.b);
  const Weight v = build_weight(ctx, cfg.weight);
  const Calculus calc = calculus_for(ctx);
  const Symbol sigma = make_symbol(cfg.symbol, ctx, rng);
  const OperatorMatrix op = quantize(sigma, calc);
  const GaborMatrix m = gabor_matrix(op, sys);
  double diagram = 0.0;
  for (int t = 0; t < std::min(cfg.trials, 20); ++t) diagram = std::max(diagram, diagram_check(op, sys, random_signal(ctx, rng)));
  Json out{{"calculus", calculus_name(calc)}, {"lattice_size", m.size()}, {"cv_norm", cv_norm(m, v)},
           {"weight", v.id()}, {"diagram_residual", diagram}};
  rec.check("diagram_residual", diagram, 1e-10);
  if (ctx.is_odd() && ctx.n() <= SymbolSTFT::kMaxN) {
    const SymbolSTFT vs = symbol_stft(sigma, g);
    const int n = ctx.n();
    std::vector<std::pair<double, double>> pairs;
    double rhs_max = 0.0;
    for (int t = 0; t < std::min(cfg.trials, 200); ++t) {
      const PhasePoint z = make_point(ctx, rng.below(n), rng.below(n));
      const PhasePoint w = make_point(ctx, rng.below(n), rng.below(n));
      const double lhs = std::abs(inner(op.apply(tf_shift(g, z)), tf_shift(g, w)));
      const double rhs = std::abs(vs(scale(ctx, ctx.inv2(), add(ctx, w, z)), j_map(ctx, subtract(ctx, w, z))));
      pairs.emplace_back(lhs, rhs);
      rhs_max = std::max(rhs_max, rhs);
    }
    double lo = kInf, hi = 0.0;
    for (const auto& [lhs, rhs] : pairs) {
      if (rhs <= 1e-8 * rhs_max) continue;
      lo = std::min(lo, lhs / rhs);
      hi = std::max(hi, lhs / rhs);
    }
    if (hi > 0.0) {
      out["c_prime_N"] = hi;
      out["c_prime_N_times_N"] = hi * n;
      out["c_prime_N_spread"] = (hi - lo) / hi;
      rec.check("c_prime_N_spread", (hi - lo) / hi, 1e-10);
      out["sjostrand_norm"] = sjostrand_norm(vs, v.rotated());
    }
  }
  rec.artifact("gabor_matrix.csv", matrix_csv(m.values()));
  return out;
}

Json run_decay(const ExperimentConfig& cfg, const GroupCtx& ctx, Rng& rng, Recorder& rec) {
  const GaborSystem sys = build_system(make_window(cfg, ctx), *cfg.a, *cfg.b);
  const Weight v = build_weight(ctx, cfg.weight);
  const Calculus calc = calculus_for(ctx);
  const Symbol sigma = make_symbol(cfg.symbol, ctx, rng);
  const DecayProfile h = decay_profile(gabor_matrix(quantize(sigma, calc), sys));
  Json out{{"calculus", calculus_name(calc)}, {"weight", v.id()}, {"cv_norm", cv_norm(h, v)},
           {"fit", fit_json(fit_decay(h))}, {"tail_ratio", tail_ratio(h)}, {"h0", h[0]}};
  rec.check_flag("profile_finite", h.values().allFinite());
  rec.artifact("profile.csv", profile_csv(h));
  return out;
}

Json run_algebra(const ExperimentConfig& cfg, const GroupCtx& ctx, Rng& rng, Recorder& rec) {
  const GaborSystem sys = build_system(make_window(cfg, ctx), *cfg.a, *cfg.b);
  const Weight v = build_weight(ctx, cfg.weight);
  const Symbol sigma = make_symbol(cfg.symbol, ctx, rng);
  const Symbol tau = make_symbol(cfg.symbol, ctx, rng);
  const double residual = algebra_check(sigma, tau, sys);
  const GaborMatrix ms = gabor_matrix(weyl_quantize(sigma), sys, Window::Tight);
  const GaborMatrix mt = gabor_matrix(weyl_quantize(tau), sys, Window::Tight);
  const double prod = cv_norm(ms * mt, v);
  const double bound = cv_norm(ms, v) * cv_norm(mt, v);
  Json out{{"residual", residual},
           {"weight", v.id()},
           {"cv_norm_product", prod},
           {"cv_norm_bound", bound}};
  rec.check("residual", residual, 1e-9);
  rec.check_flag("cv_submultiplicative", prod <= bound * (1.0 + 1e-12));
  rec.artifact("gabor_matrix_product.csv", matrix_csv((ms * mt).values()));
  return out;
}

Json run_wiener(const ExperimentConfig& cfg, const GroupCtx& ctx, Rng& rng, Recorder& rec) {
  const GaborSystem sys = build_system(make_window(cfg, ctx), *cfg.a, *cfg.b);
  const Weight v = build_weight(ctx, cfg.weight);
  const Symbol sigma = make_symbol(cfg.symbol, ctx, rng);
  const WienerReport r = wiener_experiment(sigma, sys, v, make_specs(cfg, ctx, v), cfg.trials, cfg.seed);
  Json cond = Json::object();
  for (const auto& [k, val] : r.condition_numbers) cond[k] = val;
  Json out{{"weight", v.id()},
           {"forward_cv_norm", r.forward_cv},
           {"inverse_cv_norm", r.inverse_cv},
           {"forward_fit", fit_json(r.forward_fit)},
           {"inverse_fit", fit_json(r.inverse_fit)},
           {"pseudoinverse_residual", r.pseudoinverse_residual},
           {"projection_residual", r.projection_residual},
           {"tail_ratio", r.tail_ratio},
           {"condition_numbers", cond}};
  rec.check("projection_residual", r.projection_residual, 1e-8);
  rec.check("pseudoinverse_residual", r.pseudoinverse_residual, 1e-9);
  rec.artifact("profile_forward.csv", profile_csv(r.forward_profile));
  rec.artifact("profile_inverse.csv", profile_csv(r.inverse_profile));
  return out;
}

Json run_bounds(const ExperimentConfig& cfg, const GroupCtx& ctx, Rng& rng, Recorder& rec) {
  const GaborSystem sys = build_system(make_window(cfg, ctx), *cfg.a, *cfg.b);
  const Weight v = build_weight(ctx, cfg.weight);
  const Symbol sigma = make_symbol(cfg.symbol, ctx, rng);
  std::vector<MixedNormSpec> specs = make_specs(cfg, ctx, v);
  if (specs.empty())
    for (double p : {1.0, 2.0, kInf})
      for (double q : {1.0, 2.0, kInf}) specs.emplace_back(p, q, ModerateWeight::unweighted(ctx, v));
  const Calculus calc = calculus_for(ctx);
  const BoundednessReport r = boundedness_report(sigma, sys, v, specs, cfg.trials, cfg.seed, calc);
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"spec", row.spec}, {"estimate", row.estimate}, {"bound", row.bound}, {"ratio", row.ratio}});
  rec.check_flag("all_estimates_within_bound", r.holds);
  return Json{{"calculus", calculus_name(calc)}, {"weight", v.id()}, {"cv_norm", r.cv}, {"rows", rows}};
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  for (const auto& [name, k] : kind_names())
    if (k == kind) return name;
  return "?";
}

Weight build_weight(const GroupCtx& ctx, const WeightConfig& cfg) {
  switch (cfg.kind) {
    case Weight::Kind::Constant:
      return Weight::constant();
    case Weight::Kind::Polynomial:
      return Weight::polynomial(cfg.s);
    case Weight::Kind::Subexponential:
      return Weight::subexponential(cfg.a, cfg.b);
    case Weight::Kind::Custom:
      return Weight::custom(ctx, cfg.table, cfg.grs);
  }
  return Weight::constant();
}

ExperimentConfig parse_config(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("<root>", "expected a JSON object");
  reject_unknown(doc, {"seed", "group", "lattice", "window", "weight", "symbol", "norms", "experiment", "output_dir", "trials"},
                 "");
  ExperimentConfig cfg;
  cfg.echo = doc;

  const Json& exp = require(doc, "experiment", "experiment");
  const std::string ename = exp.is_string() ? exp.get<std::string>() : "";
  const auto found = kind_names().find(ename);
  if (found == kind_names().end())
    throw ConfigError("experiment",
                      "expected one of Stft, GaborInfo, Quantize, GaborMatrix, Decay, Algebra, Wiener, Bounds, Suite");
  cfg.experiment = found->second;

  if (doc.contains("seed")) {
    const Json& s = doc.at("seed");
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0))
      throw ConfigError("seed", "expected a non-negative integer");
    cfg.seed = s.get<std::uint64_t>();
  }
  if (doc.contains("trials")) {
    const long long t = integer(doc.at("trials"), "trials");
    if (t < 1 || t > 1000000) throw ConfigError("trials", "must lie in [1, 10^6]");
    cfg.trials = static_cast<int>(t);
  }
  if (doc.contains("output_dir")) {
    if (!doc.at("output_dir").is_string()) throw ConfigError("output_dir", "expected a path string");
    cfg.output_dir = doc.at("output_dir").get<std::string>();
  }

  // group
  if (doc.contains("group")) {
    const Json& g = doc.at("group");
    if (!g.is_object()) throw ConfigError("group", "expected {\"N\": ...}");
    reject_unknown(g, {"N"}, "group");
    const long long n = integer(require(g, "N", "group.N"), "group.N");
    if (n < 2 || n > 4096) throw ConfigError("group.N", "must lie in [2, 4096]");
    cfg.n = static_cast<int>(n);
  } else if (cfg.experiment != ExperimentKind::Suite) {
    throw ConfigError("group.N", "missing");
  }

  if (cfg.experiment == ExperimentKind::Suite) {
    if (cfg.n && (*cfg.n % 2 == 0 || *cfg.n % 3 != 0 || *cfg.n > 32))
      throw ConfigError("group.N", "the suite's Weyl criteria need N odd, a multiple of 3 and at most 32; got " +
                                       std::to_string(*cfg.n));
    return cfg;
  }
  const int n = *cfg.n;
  if (needs_odd(cfg.experiment) && n % 2 == 0)
    throw ConfigError("group.N", "experiment " + ename + " uses the Weyl calculus and needs odd N; got " + std::to_string(n));

  // lattice
  if (doc.contains("lattice") || needs_lattice(cfg.experiment)) {
    const Json& lat = require(doc, "lattice", "lattice");
    if (!lat.is_object()) throw ConfigError("lattice", "expected {\"a\": ..., \"b\": ...}");
    reject_unknown(lat, {"a", "b"}, "lattice");
    for (const char* key : {"a", "b"}) {
      const std::string field = std::string("lattice.") + key;
      const long long v = integer(require(lat, key, field), field);
      if (v < 1 || n % v != 0)
        throw ConfigError(field, "must be a positive divisor of group.N=" + std::to_string(n) + "; got " + std::to_string(v));
      (std::string(key) == "a" ? cfg.a : cfg.b) = static_cast<int>(v);
    }
  }

  // window
  if (doc.contains("window")) {
    const Json& w = doc.at("window");
    if (w.is_string()) {
      if (w.get<std::string>() != "Gaussian") throw ConfigError("window", "expected \"Gaussian\" or a sample list");
    } else if (w.is_array()) {
      if (static_cast<int>(w.size()) != n) throw ConfigError("window", "expected " + std::to_string(n) + " samples (group.N)");
      CVector samples(n);
      for (int i = 0; i < n; ++i) samples[i] = complex_value(w[i], "window[" + std::to_string(i) + "]");
      if (!samples.allFinite()) throw ConfigError("window", "samples must be finite");
      if (samples.norm() == 0.0) throw ConfigError("window", "must not be zero");
      cfg.window = samples;
    } else {
      throw ConfigError("window", "expected \"Gaussian\" or a sample list");
    }
  }

  if (doc.contains("weight")) cfg.weight = parse_weight(doc.at("weight"), "weight");
  if (doc.contains("symbol")) cfg.symbol = parse_symbol(doc.at("symbol"), n);
  if (doc.contains("norms")) {
    const Json& ns = doc.at("norms");
    if (!ns.is_array()) throw ConfigError("norms", "expected a list");
    for (std::size_t i = 0; i < ns.size(); ++i) cfg.norms.push_back(parse_norm(ns[i], "norms[" + std::to_string(i) + "]"));
  }

  // Referenced weights must construct (custom tables are checked here).
  const GroupCtx ctx(n);
  Weight v = Weight::constant();
  try {
    v = build_weight(ctx, cfg.weight);
  } catch (const Error& e) {
    throw ConfigError("weight", e.what());
  }
  for (std::size_t i = 0; i < cfg.norms.size(); ++i) {
    const std::string field = "norms[" + std::to_string(i) + "].weight";
    try {
      if (cfg.norms[i].ref == NormConfig::Ref::Explicit)
        (void)ModerateWeight::calibrated(ctx, build_weight(ctx, cfg.norms[i].m), v);
    } catch (const Error& e) {
      throw ConfigError(field, e.what());
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("<file>", path.string() + ": " + e.what());
  }
  return parse_config(doc);
}

RunResult run_experiment(const ExperimentConfig& cfg) {
  RunResult result;
  Json summary;
  summary["library"] = "gaborlab";
  summary["version"] = library_version();
  summary["rng"] = Rng::kName;
  summary["seed"] = cfg.seed;
  summary["experiment"] = to_string(cfg.experiment);
  summary["config"] = cfg.echo;

  if (cfg.experiment == ExperimentKind::Suite) {
    SuiteOptions opts;
    opts.seed = cfg.seed;
    opts.weyl_n = cfg.n;
    try {
      const SuiteReport report = run_suite(opts);
      summary["results"] = report.summary;
      for (const auto& c : report.criteria) result.lines.push_back(criterion_line(c));
      result.exit_code = report.all_pass() ? 0 : 1;
      if (!report.all_pass()) {
        std::string failed;
        for (const auto& c : report.criteria)
          if (!c.pass) failed += (failed.empty() ? "" : ", ") + std::to_string(c.id);
        result.message = "failed criteria: " + failed;
      }
    } catch (const ConfigError& e) {
      result.exit_code = 2;
      result.message = e.what();
    }
    summary["status"] = result.exit_code == 0 ? "pass" : "fail";
    if (!result.message.empty()) summary["message"] = result.message;
    if (cfg.output_dir && result.exit_code != 2) write_text(*cfg.output_dir / "summary.json", to_json_text(summary));
    result.summary = std::move(summary);
    return result;
  }

  Recorder rec;
  try {
    const GroupCtx ctx(*cfg.n);
    Rng rng(cfg.seed);
    Json out;
    switch (cfg.experiment) {
      case ExperimentKind::Stft: out = run_stft(cfg, ctx, rng, rec); break;
      case ExperimentKind::GaborInfo: out = run_gabor_info(cfg, ctx, rng, rec); break;
      case ExperimentKind::Quantize: out = run_quantize(cfg, ctx, rng, rec); break;
      case ExperimentKind::GaborMatrix: out = run_gabor_matrix(cfg, ctx, rng, rec); break;
      case ExperimentKind::Decay: out = run_decay(cfg, ctx, rng, rec); break;
      case ExperimentKind::Algebra: out = run_algebra(cfg, ctx, rng, rec); break;
      case ExperimentKind::Wiener: out = run_wiener(cfg, ctx, rng, rec); break;
      case ExperimentKind::Bounds: out = run_bounds(cfg, ctx, rng, rec); break;
      case ExperimentKind::Suite: break;
    }
    summary["results"] = out;
    summary["checks"] = rec.checks();
    if (rec.failed().empty()) {
      result.exit_code = 0;
    } else {
      result.exit_code = 1;
      std::string names;
      for (const auto& f : rec.failed()) names += (names.empty() ? "" : ", ") + f;
      result.message = "failed checks: " + names;
    }
  } catch (const ConfigError& e) {
    result.exit_code = 2;
    result.message = e.what();
  } catch (const Error& e) {
    // Library preconditions that the config validation cannot see in
    // advance, e.g. a lattice that does not give a frame.
    result.exit_code = 1;
    result.message = e.what();
  }

  summary["status"] = result.exit_code == 0 ? "pass" : "fail";
  if (!result.message.empty()) summary["message"] = result.message;
  if (cfg.output_dir && result.exit_code != 2) {
    Json files = Json::array();
    for (const auto& [name, text] : rec.artifacts()) {
      write_text(*cfg.output_dir / name, text);
      files.push_back(name);
    }
    summary["artifacts"] = files;
    write_text(*cfg.output_dir / "summary.json", to_json_text(summary));
  }
  result.summary = std::move(summary);
  return result;
}

}  // namespace gaborlab
