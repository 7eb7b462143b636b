#include "spread.hpp"

#include <cmath>
#include <stdexcept>

#include "rng.hpp"

namespace atcpg {

SpreadResult predictive_spread(const std::vector<PoincarePoint>& futures,
                               const GeometryConfig& cfg) {
  if (futures.empty())
    throw std::invalid_argument("predictive_spread: no futures");
  SpreadResult out;
  out.n_futures = static_cast<int>(futures.size());
  if (futures.size() == 1) return out;

  double sum = 0.0, sum2 = 0.0;
  int pairs = 0;
  for (size_t i = 0; i < futures.size(); ++i) {
    for (size_t j = i + 1; j < futures.size(); ++j) {
      const double d = poincare_distance(futures[i], futures[j], cfg);
      sum += d;
      sum2 += d * d;
      ++pairs;
    }
  }
  out.mean_pairwise = sum / pairs;
  out.var_pairwise = sum2 / pairs - out.mean_pairwise * out.mean_pairwise;
  if (out.var_pairwise < 0) out.var_pairwise = 0;  // rounding guard
  out.kappa = out.mean_pairwise + out.var_pairwise;
  return out;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Conflicted: return "Conflicted";
    case Regime::Confident: return "Confident";
    case Regime::Noise: return "Noise";
  }
  return "?";
}

namespace {

// Scales calibrated once against the target mean radii (0.90 / 0.37 / 0.12)
// and frozen. The conflicted scale deliberately pushes the both-features-kept
// mask onto the clipped boundary, which is where the opposing-features
// divergence lives.
constexpr double kConflictedScale = 0.65;
constexpr double kConfidentScale = 0.37;
constexpr double kNoiseNorm = 0.11;

std::vector<double> base_state(const RegimeSpec& spec, RngStream& rng) {
  std::vector<double> b(static_cast<size_t>(spec.dim), 0.0);
  switch (spec.regime) {
    case Regime::Conflicted:
      b[0] = kConflictedScale;
      b[1] = -kConflictedScale;
      break;
    case Regime::Confident:
      b[0] = kConfidentScale;
      break;
    case Regime::Noise:
      // Direction varies with the seed, magnitude never does: the radius
      // band has to hold for every seed, and a raw Gaussian norm wanders
      // across it.
      for (double& x : b) x = rng.normal();
      if (double n = vec_norm(b); n > 0.0) {
        for (double& x : b) x *= kNoiseNorm / n;
      } else {
        b[0] = kNoiseNorm;
      }
      break;
  }
  return b;
}

}  // namespace

std::vector<PoincarePoint> generate_regime_samples(const RegimeSpec& spec) {
  if (spec.n_samples < 2)
    throw std::invalid_argument("regime generation needs N >= 2");
  if (spec.dropout_rate <= 0.0 || spec.dropout_rate >= 1.0)
    throw std::invalid_argument("dropout rate must lie in (0,1)");

  RngStream rng = RngStream::derive(spec.seed, 0x7265 + static_cast<uint64_t>(spec.regime));
  const std::vector<double> base = base_state(spec, rng);
  const double keep = 1.0 - spec.dropout_rate;
  const double inv_keep = 1.0 / keep;  // inverted-dropout rescale

  std::vector<PoincarePoint> samples;
  samples.reserve(static_cast<size_t>(spec.n_samples));
  for (int i = 0; i < spec.n_samples; ++i) {
    std::vector<double> v(base.size(), 0.0);
    for (size_t k = 0; k < base.size(); ++k)
      if (rng.bernoulli(keep)) v[k] = base[k] * inv_keep;
    samples.push_back(project(std::move(v), 1.0 - 1e-5));
  }
  return samples;
}

std::vector<RegimeRow> run_regime_experiment(uint64_t seed) {
  std::vector<RegimeRow> rows;
  for (Regime r : {Regime::Conflicted, Regime::Confident, Regime::Noise}) {
    RegimeSpec spec;
    spec.regime = r;
    spec.seed = seed;
    const auto samples = generate_regime_samples(spec);
    double radius = 0.0;
    for (const auto& s : samples) radius += vec_norm(s.coords);
    radius /= static_cast<double>(samples.size());
    rows.push_back(RegimeRow{r, radius, predictive_spread(samples).kappa, 0.0});
  }
  const double confident = rows[1].kappa;
  for (auto& row : rows)
    row.ratio_vs_confident = confident > 0 ? row.kappa / confident : 0.0;
  return rows;
}

}  // namespace atcpg
