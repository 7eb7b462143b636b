#pragma once

namespace atcpg {

struct RewardConfig {
  double efficiency_gain = 2.0;
  double spacing_gain = 1.5;
  double spread_gain = 1.0;
  double dt_base = 60.0;
};

struct RewardBreakdown {
  double efficiency_term = 0.0;
  double spacing_term = 0.0;
  double spread_term = 0.0;
  double overload_magnitude = 0.0;  // max(0, -dwb)
  double total = 0.0;
};

// Interval-aware shaping with three additive parts: wellbeing change paid per
// unit of elapsed time, a spacing bonus that forgives harm in proportion to
// how long the agent waited, and a spread bonus that decays with the
// interval. Together they say: when the futures disagree, act sooner; when
// the last tick hurt, back off.
RewardBreakdown interval_aware_reward(double wellbeing_delta, double kappa,
                                      double dt, const RewardConfig& cfg = {});

// Latency-greedy baseline used by the reward ablation (latency in ms).
double naive_reward(double wellbeing_delta, double latency_ms);

}  // namespace atcpg
