#pragma once

// The acceptance battery: thirteen numbered criteria with fixed
// configurations and pinned thresholds.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gaborlab/serialize.hpp"

namespace gaborlab {

using JMap = std::function<PhasePoint(const GroupCtx&, PhasePoint)>;

struct SuiteOptions {
  std::uint64_t seed = 1;
  // Overrides N for the small Weyl criteria (4 and 5); must be odd, a
  // multiple of 3 and at most 32.
  std::optional<int> weyl_n;
  // Criterion ids to run; empty means all.
  std::set<int> only;
  // The symplectic map used by criterion 5. Replaceable so that a wrong
  // sign can be injected as a mutation check.
  JMap j = nullptr;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  // Cannot hold as stated; see README.
  bool known_unattainable = false;
  std::string detail;
  Json metrics = Json::object();
  double seconds = 0.0;  // wall time, not serialized
};

struct SuiteReport {
  std::vector<CriterionResult> criteria;
  Json summary;  // deterministic: no timings

  bool all_pass() const;
  // All failures are known-unattainable criteria.
  bool only_known_failures() const;
};

// Throws ConfigError on invalid options.
SuiteReport run_suite(const SuiteOptions& options);

// "PASS  5  fundamental identity  (0.8 s)  detail"
std::string criterion_line(const CriterionResult& r);

}  // namespace gaborlab
