#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace atcpg {

struct SpreadResult {
  double kappa = 0.0;
  double mean_pairwise = 0.0;
  double var_pairwise = 0.0;
  int n_futures = 0;
};

// kappa = mean + population variance of the pairwise geodesic distances.
// One future carries no divergence information: kappa = 0.
SpreadResult predictive_spread(const std::vector<PoincarePoint>& futures,
                               const GeometryConfig& cfg = {});

enum class Regime { Conflicted, Confident, Noise };

const char* regime_name(Regime r);

struct RegimeSpec {
  Regime regime = Regime::Confident;
  int n_samples = 200;
  double dropout_rate = 0.20;
  int dim = 6;
  uint64_t seed = 0;
};

// N inverted-dropout masks applied to the regime's base state, each masked
// vector embedded magnitude-preservingly (the per-regime scale is calibrated
// against the target mean radii and frozen here).
std::vector<PoincarePoint> generate_regime_samples(const RegimeSpec& spec);

struct RegimeRow {
  Regime regime;
  double mean_radius = 0.0;
  double kappa = 0.0;
  double ratio_vs_confident = 0.0;
};

std::vector<RegimeRow> run_regime_experiment(uint64_t seed);

}  // namespace atcpg
