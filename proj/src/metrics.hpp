#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "policy.hpp"
#include "reward.hpp"

namespace atcpg {

struct TickRecord {
  int tick = 0;
  std::array<double, 6> context{};
  double kappa = 0.0;
  double interval = 0.0; // chosen, post-exploration, seconds
  double latency_ms = 0.0;
  bool overload = false;
  bool success = false;
  double wellbeing = 0.0;
  double wellbeing_delta = 0.0;
  RewardBreakdown reward{};
  std::uint64_t weights_hash = 0;
  double phase = 0.0;
};

struct RunTrace {
  std::vector<TickRecord> ticks;
};

struct RunResult {
  double efficiency = 0.0;        // mean success per second of chosen interval
  double performance_score = 0.0; // mean success rate
  double wellbeing_std = 0.0;
  double mean_interval = 0.0;
  double kappa_mean_overload = 0.0;
  double kappa_mean_normal = 0.0;
  double kappa_discriminability = 0.0;
  int total_ticks = 0;
};

// (1/T) * sum of success_t / dt_t
double efficiency(const std::vector<bool>& successes,
                  const std::vector<double>& intervals);

std::uint64_t hash_weights(const PolicyWeights& w);

// All RunResult fields from the trace. The overload/normal kappa split uses
// the true flag recorded in the trace; it exists for reporting only and is
// never fed back to a blind controller.
RunResult summarize(const RunTrace& trace);

}  // namespace atcpg
