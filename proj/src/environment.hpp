#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "embedding.hpp"
#include "rng.hpp"

namespace atcpg {

struct EnvParams {
  double overload_prob = 0.3;
  double d_base_normal = 50.0;    // ms
  double d_base_overload = 200.0; // ms
  double d_std = 20.0;            // ms
  double priority_coeff = 30.0;   // ms shaved off latency per unit priority
  double dwb_mean_normal = 0.1;
  double dwb_mean_overload = -0.2;
  double dwb_std = 0.05;

  // Fatigue accrues at the start of every overloaded tick and drains while
  // the agent waits; the drain is proportional to the wait length.
  double fatigue_bump = 0.5;
  double fatigue_decay = 0.7; // fraction removed per dt_base of waiting
  double fatigue_max = 5.0;
  double dt_base = 60.0; // seconds

  // Blind futures: context plus i.i.d. Gaussian perturbation whose scale
  // grows with observable fatigue. Load reaches the spread signal only
  // through this channel, never through the overload flag itself.
  int n_futures = 4;
  double noise_scale = 0.095;
  double noise_fatigue_coeff = 8.0;

  // Privileged spread source: conditioned directly on the overload flag.
  double tc_mu_overload = 2.0;
  double tc_sigma_overload = 0.3;
  double tc_mu_normal = 0.1;
  double tc_sigma_normal = 0.05;

  // Position generator for the spatial variant.
  int pos_dim = 3;
  double pos_sigma_overload = 3.0;
  double pos_sigma_normal = 0.2;
};

struct TickOutcome {
  double latency_ms = 0.0;
  double wellbeing_delta = 0.0; // realised, post-clamp
  bool overload = false;
  bool success = false;
  double priority = 0.0;
  double fatigue = 0.0;
  double wellbeing = 0.0; // accumulator after this tick
};

// Every random draw one tick consumes, in a fixed order, so that two
// controllers replaying the same trajectory see identical randomness no
// matter which draws they actually use.
struct TickDraws {
  bool overload = false;
  double priority = 0.0;
  double latency_unit = 0.0; // standard normal
  double dwb_unit = 0.0;     // standard normal
  double tc_unit = 0.0;      // standard normal
  std::vector<double> future_noise; // n_futures * state_dim standard normals
  std::vector<double> future_pos;   // n_futures * pos_dim standard normals
  double frozen_fatigue = 0.0; // fatigue path under dt_base pacing
};

struct SharedTrajectory {
  std::uint64_t seed = 0;
  int n_futures = 4;
  int state_dim = 6;
  int pos_dim = 3;
  bool with_positions = false;
  std::vector<TickDraws> ticks;

  std::string to_json() const;
  static SharedTrajectory from_json(const std::string& text);
};

SharedTrajectory generate_shared_trajectory(const EnvParams& params,
                                            std::uint64_t seed, int length,
                                            bool with_positions);

// One-shot outcome draw, the bare stochastic kernel without the fatigue or
// futures machinery. Wellbeing clamping is the caller's job here.
TickOutcome step(const EnvParams& params, double priority, RngStream& rng);

double tc_spread(const EnvParams& params, bool overload, RngStream& rng);

std::vector<double> gen_position(const EnvParams& params, bool overload,
                                 RngStream& rng);

std::vector<FutureSample> blind_futures(const std::array<double, 6>& context,
                                        int n, double noise_std,
                                        bool with_positions,
                                        const EnvParams& params, bool overload,
                                        RngStream& rng);

// Tick environment on a virtual clock. Live mode draws its own randomness
// and lets fatigue follow the actually chosen intervals; replay mode reads
// every draw (including the fatigue path) from a SharedTrajectory so that
// competing controllers face bit-identical conditions.
class Environment {
 public:
  Environment(const EnvParams& params, std::uint64_t seed);
  Environment(const EnvParams& params, const SharedTrajectory* trajectory);

  struct TickInputs {
    double priority = 0.0;
    double fatigue = 0.0;
  };

  // Advance latent state to the next tick: drain fatigue for the wait that
  // just ended, then accrue this tick's load. The bump lands before the
  // tick resolves so that fatigue is the observable trace of current load.
  TickInputs begin_tick(double dt_prev);

  // n noisy copies of the context; perturbation std is
  // noise_scale * (1 + noise_fatigue_coeff * fatigue).
  std::vector<FutureSample> futures(const std::array<double, 6>& context,
                                    bool with_positions,
                                    bool zero_positions = false);

  // Privileged: conditioned on this tick's hidden overload flag.
  double tc_kappa();

  TickOutcome resolve_tick(double dt_chosen);

  double wellbeing() const { return wellbeing_; }
  double fatigue() const { return fatigue_; }
  double clock_seconds() const { return clock_; }
  int tick_index() const { return tick_; }

 private:
  const TickDraws& draws();

  EnvParams params_;
  RngStream rng_;
  const SharedTrajectory* trajectory_ = nullptr;
  TickDraws live_draws_;
  bool draws_ready_ = false;
  double wellbeing_ = 0.5;
  double fatigue_ = 0.0;
  double clock_ = 0.0;
  int tick_ = 0;
};

}  // namespace atcpg
