#include "embedding.hpp"

#include <stdexcept>

namespace atcpg {

namespace {

// pad/trim(z, m) then sigma * z' / ||z'||; raw coordinates, not yet a point
std::vector<double> normalised_component(const std::vector<double>& z, int m,
                                         double sigma) {
  std::vector<double> v(static_cast<size_t>(m), 0.0);
  for (size_t i = 0; i < v.size() && i < z.size(); ++i) v[i] = z[i];
  const double n = vec_norm(v);
  if (n == 0.0) return v;
  for (double& x : v) x *= sigma / n;
  return v;
}

}  // namespace

PoincarePoint embed_state(const std::vector<double>& z,
                          const EmbeddingConfig& cfg) {
  if (z.empty()) throw std::invalid_argument("embed_state: empty state vector");
  return project(normalised_component(z, cfg.state_dim, cfg.scale), cfg.r_max,
                 cfg.curvature);
}

PoincarePoint embed_joint(const FutureSample& sample,
                          const EmbeddingConfig& cfg) {
  if (!sample.position.has_value()) return embed_state(sample.state, cfg);
  if (cfg.position_dim < 1)
    throw std::invalid_argument("embed_joint: position given but position_dim is 0");
  std::vector<double> joint =
      normalised_component(sample.state, cfg.state_dim, cfg.scale);
  const std::vector<double> pos =
      normalised_component(*sample.position, cfg.position_dim, cfg.scale);
  joint.insert(joint.end(), pos.begin(), pos.end());
  return project(std::move(joint), cfg.r_max, cfg.curvature);
}

}  // namespace atcpg
