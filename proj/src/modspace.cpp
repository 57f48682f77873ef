#include "gaborlab/modspace.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gaborlab/random.hpp"

namespace gaborlab {
namespace {

bool valid_exponent(double p) { return p >= 1.0 && (std::isfinite(p) || p == kInf); }

std::string exponent_str(double p) {
  if (p == kInf) return "inf";
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace

MixedNormSpec::MixedNormSpec(double p, double q, ModerateWeight m) : p_(p), q_(q), m_(std::move(m)) {
  if (!valid_exponent(p)) throw PreconditionError("mixed norm exponent p must lie in [1, inf]");
  if (!valid_exponent(q)) throw PreconditionError("mixed norm exponent q must lie in [1, inf]");
}

std::string MixedNormSpec::id() const {
  return "p=" + exponent_str(p_) + ",q=" + exponent_str(q_) + ",m=" + m_.m().id();
}

double mixed_norm(const CoeffArray& c, const MixedNormSpec& spec) {
  const Lattice& lat = c.lattice();
  const GroupCtx& ctx = lat.ctx();
  const double p = spec.p();
  const double q = spec.q();
  double outer = 0.0;
  for (int l = 0; l < lat.freq_count(); ++l) {
    double inner = 0.0;
    for (int k = 0; k < lat.time_count(); ++k) {
      const int idx = lat.index(k, l);
      const double term = std::abs(c.values()[idx]) * spec.m().m().at(ctx, lat.point(idx));
      if (p == kInf)
        inner = std::max(inner, term);
      else
        inner += std::pow(term, p);
    }
    if (p != kInf) inner = std::pow(inner, 1.0 / p);
    if (q == kInf)
      outer = std::max(outer, inner);
    else
      outer += std::pow(inner, q);
  }
  return q == kInf ? outer : std::pow(outer, 1.0 / q);
}

double mod_norm(const Signal& f, const GaborSystem& sys, const MixedNormSpec& spec, Window w) {
  return mixed_norm(analyze(sys, f, w), spec);
}

YoungReport young_bound_check(const GaborMatrix& m, const Weight& v, const MixedNormSpec& spec, int trials,
                              std::uint64_t seed) {
  if (v.id() != spec.m().base().id())
    throw PreconditionError("young_bound_check: weight " + v.id() + " is not the base weight " +
                            spec.m().base().id() + " of the mixed norm");
  YoungReport report;
  report.trials = trials;
  report.bound = cv_norm(m, v) * spec.m().constant();
  Rng rng(seed);
  const Lattice& lat = m.lattice();
  for (int t = 0; t < trials; ++t) {
    const CoeffArray c(lat, rng.complex_vector(lat.size()));
    const double denom = mixed_norm(c, spec);
    if (denom == 0.0) continue;
    const double ratio = mixed_norm(m.apply(c), spec) / denom;
    report.max_ratio = std::max(report.max_ratio, ratio);
  }
  report.holds = report.max_ratio <= report.bound * (1.0 + 1e-12);
  return report;
}

CoeffArray translate(const CoeffArray& c, int r, int s) {
  const Lattice& lat = c.lattice();
  CVector out(lat.size());
  for (int l = 0; l < lat.freq_count(); ++l)
    for (int k = 0; k < lat.time_count(); ++k)
      out[lat.index(k, l)] = c.values()[lat.index(static_cast<long long>(k) - r, static_cast<long long>(l) - s)];
  return CoeffArray(lat, std::move(out));
}

}  // namespace gaborlab
