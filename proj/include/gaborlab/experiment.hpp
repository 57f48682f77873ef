#pragma once

// Configuration-driven experiments. A config is a JSON document; every
// field is validated before anything runs and errors name the field.

#include <complex>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gaborlab/serialize.hpp"
#include "gaborlab/weight.hpp"

namespace gaborlab {

std::string library_version();

enum class ExperimentKind { Stft, GaborInfo, Quantize, GaborMatrix, Decay, Algebra, Wiener, Bounds, Suite };

std::string to_string(ExperimentKind kind);

struct WeightConfig {
  Weight::Kind kind = Weight::Kind::Constant;
  double s = 0.0;  // polynomial
  double a = 0.0;  // subexponential rate
  double b = 0.0;  // subexponential power
  RMatrix table;   // custom
  bool grs = true;
};

struct SymbolConfig {
  enum class Kind { Constant, EpsPerturbation, Random, Table };
  Kind kind = Kind::EpsPerturbation;
  Complex c{1.0, 0.0};
  double eps = 0.3;
  double width = 3.0;
  int band = 2;
  CMatrix table;
};

// One entry of `norms`: exponents and the weight m, either the base
// weight v, the unit weight, or an explicit weight.
struct NormConfig {
  enum class Ref { Base, Unit, Explicit };
  double p = 1.0;
  double q = 1.0;
  Ref ref = Ref::Base;
  WeightConfig m;
};

struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::optional<int> n;
  std::optional<int> a;
  std::optional<int> b;
  std::optional<CVector> window;  // empty: periodized Gaussian
  WeightConfig weight;
  SymbolConfig symbol;
  std::vector<NormConfig> norms;
  ExperimentKind experiment = ExperimentKind::Stft;
  std::optional<std::filesystem::path> output_dir;
  int trials = 200;
  Json echo;  // the document as given, for provenance
};

// Throws ConfigError naming the offending field.
ExperimentConfig parse_config(const Json& doc);
// Parse errors report line and column.
ExperimentConfig load_config(const std::filesystem::path& path);

struct RunResult {
  int exit_code = 0;  // 0 success, 1 failed check, 2 config error
  Json summary;
  std::string message;
  std::vector<std::string> lines;  // human-readable table (suite)
};

// Never throws for library or config errors; they map to exit codes.
RunResult run_experiment(const ExperimentConfig& config);

Weight build_weight(const GroupCtx& ctx, const WeightConfig& cfg);

}  // namespace gaborlab
