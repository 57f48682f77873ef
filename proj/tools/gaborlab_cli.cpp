// gaborlab: run one configured experiment or the acceptance suite.
//
//   gaborlab run <config.json> [--seed S] [--out DIR] [--json]
//   gaborlab suite [--config FILE] [--out DIR] [--seed S] [--json] [--only 1,5]
//
// Exit codes: 0 success, 1 a check failed, 2 configuration error.

#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"

#include "gaborlab/experiment.hpp"
#include "gaborlab/suite.hpp"
#include "gaborlab/tf_core.hpp"

using namespace gaborlab;

namespace {

int report(const RunResult& r, bool json) {
  for (const auto& line : r.lines) std::cerr << line << "\n";
  if (json) std::cout << to_json_text(r.summary);
  if (!r.message.empty()) std::cerr << (r.exit_code == 2 ? "config error: " : "failed: ") << r.message << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Gabor analysis and pseudodifferential operator experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", library_version());

  std::optional<std::uint64_t> seed;
  bool json = false;
  std::string out_dir;
  app.add_option("--seed", seed, "Override the RNG seed")->expected(1);
  app.add_flag("--json", json, "Print the JSON summary to standard output");

  auto* run = app.add_subcommand("run", "Run the experiment described by a config file");
  std::string config_path;
  run->add_option("config", config_path, "Experiment config (JSON)")->required();
  run->add_option("--out", out_dir, "Output directory (overrides output_dir)");
  run->add_option("--seed", seed, "Override the RNG seed");
  run->add_flag("--json", json, "Print the JSON summary to standard output");

  auto* suite = app.add_subcommand("suite", "Run the acceptance battery");
  std::string suite_config;
  std::string only;
  bool mutate_j = false;
  suite->add_option("--config", suite_config, "Config file; seed and group.N are used");
  suite->add_option("--out", out_dir, "Write summary.json here");
  suite->add_option("--seed", seed, "Override the RNG seed");
  suite->add_flag("--json", json, "Print the JSON summary to standard output");
  suite->add_option("--only", only, "Comma-separated criterion ids");
  // Mutation check for the battery itself: criterion 5 must catch a sign
  // error in the symplectic map.
  suite->add_flag("--mutate-j-sign", mutate_j, "Inject a sign error into j (criterion 5 should fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      ExperimentConfig cfg = load_config(config_path);
      if (seed) cfg.seed = *seed;
      if (!out_dir.empty()) cfg.output_dir = out_dir;
      return report(run_experiment(cfg), json);
    }

    SuiteOptions opts;
    if (!suite_config.empty()) {
      const ExperimentConfig cfg = load_config(suite_config);
      opts.seed = cfg.seed;
      opts.weyl_n = cfg.n;
    }
    if (seed) opts.seed = *seed;
    if (!only.empty()) {
      std::stringstream ss(only);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          opts.only.insert(std::stoi(item));
        } catch (const std::exception&) {
          throw ConfigError("only", "not a criterion id: " + item);
        }
      }
    }
    if (mutate_j) opts.j = [](const GroupCtx& ctx, PhasePoint z) { return make_point(ctx, -z.xi, z.x); };

    const SuiteReport rep = run_suite(opts);
    for (const auto& c : rep.criteria) std::cerr << criterion_line(c) << "\n";
    Json summary = rep.summary;
    if (!out_dir.empty()) write_text(std::filesystem::path(out_dir) / "summary.json", to_json_text(summary));
    if (json) std::cout << to_json_text(summary);
    if (!rep.all_pass()) {
      std::cerr << "failed criteria:";
      for (const auto& c : rep.criteria)
        if (!c.pass) std::cerr << " " << c.id;
      std::cerr << "\n";
      return 1;
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
