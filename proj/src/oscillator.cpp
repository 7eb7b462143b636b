#include "oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace atcpg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kOmegaMin = 0.001;
constexpr double kOmegaMax = 0.2;

double wrap_phase(double phi) {
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  return phi;
}

}  // namespace

OscillatorState random_oscillator(RngStream& rng) {
  OscillatorState s;
  s.phase = rng.uniform(0.0, kTwoPi);
  s.omega = 0.05;
  return s;
}

OscillatorState advance(OscillatorState state, double r_tilde, double alpha) {
  state.phase = wrap_phase(state.phase + state.omega);
  state.omega = std::clamp(state.omega + alpha * r_tilde * 0.01,
                           kOmegaMin, kOmegaMax);
  return state;
}

std::vector<double> kuramoto_step(const std::vector<double>& phases,
                                  double lambda, bool circular_mean) {
  if (phases.empty()) {
    throw std::invalid_argument("kuramoto_step needs at least one phase");
  }
  if (lambda < 0.0 || lambda > 1.0) {
    throw std::invalid_argument("coupling strength must lie in [0, 1]");
  }
  double mean = 0.0;
  if (circular_mean) {
    double sx = 0.0;
    double sy = 0.0;
    for (double phi : phases) {
      sx += std::cos(phi);
      sy += std::sin(phi);
    }
    mean = wrap_phase(std::atan2(sy, sx));
  } else {
    for (double phi : phases) mean += phi;
    mean /= static_cast<double>(phases.size());
  }
  std::vector<double> out;
  out.reserve(phases.size());
  for (double phi : phases) {
    out.push_back(wrap_phase(phi + lambda * (mean - phi)));
  }
  return out;
}

double phase_spread(const std::vector<double>& phases) {
  if (phases.empty()) {
    throw std::invalid_argument("phase_spread needs at least one phase");
  }
  auto [lo, hi] = std::minmax_element(phases.begin(), phases.end());
  return *hi - *lo;
}

}  // namespace atcpg
