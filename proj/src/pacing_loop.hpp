#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "embedding.hpp"
#include "environment.hpp"
#include "geometry.hpp"
#include "metrics.hpp"
#include "oscillator.hpp"
#include "policy.hpp"
#include "reward.hpp"

namespace atcpg {

enum class ControllerKind {
  Fixed,
  TCPrivileged,
  AtcpgStateOnly,
  AtcpgSpatioTemporal,
};

struct Ablations {
  bool no_learning = false;
  bool no_spread = false;
  bool naive_reward = false;
  bool no_exploration = false;
};

struct ControllerVariant {
  ControllerKind kind = ControllerKind::AtcpgStateOnly;
  Ablations ablations;
};

struct RunSpec {
  ControllerVariant variant;
  EnvParams env;
  PolicyConfig policy;
  RewardConfig reward;
  EmbeddingConfig embedding;
  GeometryConfig geometry;
  PolicyWeights initial_weights;
  std::uint64_t seed = 1;
  int ticks = 500;
  // Spatial decorrelation probe: positions are zeroed before embedding so
  // the joint pipeline carries no load information through space.
  bool zero_positions = false;
};

// One controller, one environment, T ticks on the virtual clock. Passing a
// trajectory switches the environment into replay mode.
std::pair<RunResult, RunTrace> run_single(
    const RunSpec& spec, const SharedTrajectory* trajectory = nullptr);

struct HeadToHeadResult {
  RunResult tc;
  RunResult atcpg;
  RunTrace tc_trace;
  RunTrace atcpg_trace;
};

// Privileged TC vs blind state-only controller on one shared trajectory.
HeadToHeadResult run_headtohead(const RunSpec& base, std::uint64_t seed,
                                int ticks);

struct SpatialResult {
  RunResult state_only;
  RunResult spatio_temporal;
  RunResult spatio_temporal_decorrelated;
  RunTrace state_only_trace;
  RunTrace spatio_temporal_trace;
  RunTrace spatio_temporal_decorrelated_trace;
  double gap_correlated = 0.0;   // |eta(ST) - eta(SO)|
  double gap_decorrelated = 0.0; // |eta(ST, zeroed positions) - eta(SO)|
};

SpatialResult run_spatial_ablation(const RunSpec& base, std::uint64_t seed,
                                   int ticks);

struct MultiAgentResult {
  double coupled_spread = 0.0;
  double uncoupled_spread = 0.0;
  std::vector<RunResult> coupled_agents;
  std::vector<RunResult> uncoupled_agents;
  std::vector<RunTrace> coupled_traces;
  std::vector<RunTrace> uncoupled_traces;
};

// Two N-agent runs from identical initial phases, one with a Kuramoto
// coupling round after every lockstep tick, one without.
MultiAgentResult run_multi_agent(const RunSpec& base, int n_agents,
                                 double lambda, int ticks,
                                 std::uint64_t seed);

}  // namespace atcpg
