#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pacing_loop.hpp"

namespace atcpg {

enum class ExperimentKind {
  Ablation,
  HeadToHead,
  Spatial,
  Regimes,
  MultiAgent,
  Single,
};

const char* experiment_name(ExperimentKind k);
ExperimentKind experiment_from_name(const std::string& name);

// Any parse or validation failure. what() names the offending fields, and
// for malformed files includes the source line.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MultiAgentParams {
  int n_agents = 5;
  double lambda = 0.1;
};

// Everything a suite run needs, loadable from a single JSON file. Comments
// (// and /* */) are allowed in config files. Missing keys keep their
// defaults; unknown keys are rejected.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::Single;
  std::vector<std::uint64_t> seeds{1};
  int ticks = 500;
  std::string output_dir = "out";

  GeometryConfig geometry;
  EmbeddingConfig embedding;
  PolicyConfig policy;
  PolicyWeights initial_weights;
  RewardConfig reward;
  EnvParams env;

  // Controller for `single` runs; the suite experiments fix their own
  // variants per row.
  ControllerVariant variant;
  MultiAgentParams multi_agent;

  // The fixed-interval reference row of the ablation table runs on its own,
  // wider seed set.
  std::vector<std::uint64_t> baseline_seeds{1, 2, 3, 4, 5};
};

// Shipped defaults for each experiment, seeds included.
ExperimentConfig preset_config(ExperimentKind k);

// Parses and fully validates config text; `source` names it in diagnostics.
ExperimentConfig parse_config(const std::string& text,
                              const std::string& source);

ExperimentConfig load_config(const std::string& path);

// Lossless: parse_config(config_to_json(c)) reproduces c exactly.
std::string config_to_json(const ExperimentConfig& cfg);

}  // namespace atcpg
