#include "reward.hpp"

#include <algorithm>
#include <stdexcept>

namespace atcpg {

RewardBreakdown interval_aware_reward(double wellbeing_delta, double kappa,
                                      double dt, const RewardConfig& cfg) {
  if (dt <= 0.0) {
    throw std::invalid_argument("reward needs dt > 0");
  }
  RewardBreakdown out;
  out.overload_magnitude = std::max(0.0, -wellbeing_delta);
  out.efficiency_term = cfg.efficiency_gain * wellbeing_delta / dt;
  out.spacing_term = cfg.spacing_gain * out.overload_magnitude *
                     (dt / cfg.dt_base);
  out.spread_term = cfg.spread_gain * kappa / dt;
  out.total = out.efficiency_term + out.spacing_term + out.spread_term;
  return out;
}

double naive_reward(double wellbeing_delta, double latency_ms) {
  if (latency_ms <= 0.0) {
    throw std::invalid_argument("naive reward needs latency > 0");
  }
  return 2.0 * wellbeing_delta + 0.5 / latency_ms;
}

}  // namespace atcpg
