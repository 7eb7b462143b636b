#pragma once

#include <vector>

#include "rng.hpp"

namespace atcpg {

struct OscillatorState {
  double phase = 0.0;   // [0, 2*pi)
  double omega = 0.05;  // [0.001, 0.2] radians per tick
};

OscillatorState random_oscillator(RngStream& rng);

// phase' = (phase + omega) mod 2pi; omega' = clip(omega + alpha * r * 0.01).
// Positive rewards speed the rhythm up, negative ones slow it down.
OscillatorState advance(OscillatorState state, double r_tilde,
                        double alpha = 0.1);

// Nudge every phase toward the group mean: phi += lambda * (mean - phi),
// then re-wrap. Uses the arithmetic mean of raw phases by default; set
// circular_mean to average on the circle instead (atan2 of summed unit
// vectors), which avoids the distortion when the group straddles the 0/2pi
// seam at the cost of a different fixed point.
std::vector<double> kuramoto_step(const std::vector<double>& phases,
                                  double lambda, bool circular_mean = false);

// max - min over raw phases in [0, 2pi). Cheap and legible, but a tight
// cluster straddling the seam reads as a wide spread.
double phase_spread(const std::vector<double>& phases);

}  // namespace atcpg
