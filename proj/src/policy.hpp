#pragma once

#include <array>

#include "rng.hpp"

namespace atcpg {

struct PolicyWeights {
  double bias = 60.0;
  double w_priority = -20.0;
  double w_fatigue = 30.0;
  double w_wellbeing = 10.0;
  double w_performance = -5.0;
  double w_phase = 5.0;
  double w_kappa = -30.0;
};

// Context feature vector, in this exact order.
struct TickContext {
  double priority = 0.0;             // [0,1]
  double fatigue = 0.0;              // [0,5]
  double wellbeing_delta_prev = 0.0; // [-1,1]
  double performance = 0.0;          // [0,1]
  double sin_phase = 0.0;            // [-1,1]
  double kappa = 0.0;                // >= 0
};

struct PolicyConfig {
  double dt_min = 10.0;
  double dt_max = 300.0;
  double dt_base = 60.0;
  double alpha = 0.1;
  double epsilon0 = 0.2;
  double weight_clip = 100.0;
};

std::array<double, 6> context_features(const TickContext& s);

// bias + w . s, clamped to [dt_min, dt_max]
double predict_interval(const PolicyWeights& w, const TickContext& s,
                        const PolicyConfig& cfg);

// epsilon0 * (1 - |dwb_prev|): explores freely while wellbeing is stable
double effective_epsilon(const TickContext& s, const PolicyConfig& cfg);

// with probability effective_epsilon, scale by Uniform(0.5, 1.5), re-clamp
double apply_exploration(double interval, const TickContext& s,
                         const PolicyConfig& cfg, RngStream& rng);

// theta <- clip(theta + alpha * r * [1, s]); the bias channel carries an
// implicit feature of 1
PolicyWeights update_weights(PolicyWeights w, double r_tilde,
                             const TickContext& s, const PolicyConfig& cfg);

// Optional REINFORCE-style variant with the Gaussian deviation factor; not
// used by any shipped experiment.
PolicyWeights update_weights_exact_reinforce(PolicyWeights w, double r_tilde,
                                             const TickContext& s,
                                             double chosen_dt,
                                             double predicted_dt, double sigma,
                                             const PolicyConfig& cfg);

}  // namespace atcpg
