#include "policy.hpp"

#include <algorithm>
#include <stdexcept>

namespace atcpg {

namespace {

double clamp(double v, double lo, double hi) {
  return std::min(std::max(v, lo), hi);
}

}  // namespace

std::array<double, 6> context_features(const TickContext& s) {
  return {s.priority,    s.fatigue,   s.wellbeing_delta_prev,
          s.performance, s.sin_phase, s.kappa};
}

double predict_interval(const PolicyWeights& w, const TickContext& s,
                        const PolicyConfig& cfg) {
  const auto f = context_features(s);
  double dt = w.bias + w.w_priority * f[0] + w.w_fatigue * f[1] +
              w.w_wellbeing * f[2] + w.w_performance * f[3] +
              w.w_phase * f[4] + w.w_kappa * f[5];
  return clamp(dt, cfg.dt_min, cfg.dt_max);
}

double effective_epsilon(const TickContext& s, const PolicyConfig& cfg) {
  double eps = cfg.epsilon0 * (1.0 - std::abs(s.wellbeing_delta_prev));
  return std::max(eps, 0.0);
}

double apply_exploration(double interval, const TickContext& s,
                         const PolicyConfig& cfg, RngStream& rng) {
  if (rng.uniform() < effective_epsilon(s, cfg)) {
    interval *= rng.uniform(0.5, 1.5);
  }
  return clamp(interval, cfg.dt_min, cfg.dt_max);
}

PolicyWeights update_weights(PolicyWeights w, double r_tilde,
                             const TickContext& s, const PolicyConfig& cfg) {
  const auto f = context_features(s);
  const double a = cfg.alpha * r_tilde;
  const double lim = cfg.weight_clip;
  w.bias = clamp(w.bias + a, -lim, lim);
  w.w_priority = clamp(w.w_priority + a * f[0], -lim, lim);
  w.w_fatigue = clamp(w.w_fatigue + a * f[1], -lim, lim);
  w.w_wellbeing = clamp(w.w_wellbeing + a * f[2], -lim, lim);
  w.w_performance = clamp(w.w_performance + a * f[3], -lim, lim);
  w.w_phase = clamp(w.w_phase + a * f[4], -lim, lim);
  w.w_kappa = clamp(w.w_kappa + a * f[5], -lim, lim);
  return w;
}

PolicyWeights update_weights_exact_reinforce(PolicyWeights w, double r_tilde,
                                             const TickContext& s,
                                             double chosen_dt,
                                             double predicted_dt, double sigma,
                                             const PolicyConfig& cfg) {
  if (sigma <= 0.0) {
    throw std::invalid_argument("exact reinforce update needs sigma > 0");
  }
  const double scale = (chosen_dt - predicted_dt) / (sigma * sigma);
  return update_weights(w, r_tilde * scale, s, cfg);
}

}  // namespace atcpg
