#pragma once

#include <optional>
#include <vector>

#include "geometry.hpp"

namespace atcpg {

struct EmbeddingConfig {
  int state_dim = 6;     // m_s
  int position_dim = 3;  // m_p, 0 disables the spatial component
  double scale = 0.9;    // sigma
  double r_max = 1.0 - 1e-5;
  double curvature = 1.0;
};

struct FutureSample {
  std::vector<double> state;
  std::optional<std::vector<double>> position;
};

// pad/trim to m_s, L2-normalise, scale by sigma, project into the ball.
// A zero vector embeds to the origin.
PoincarePoint embed_state(const std::vector<double>& z,
                          const EmbeddingConfig& cfg);

// Concatenation of the independently normalised state and position
// embeddings, projected once more into the joint ball. Falls back to
// embed_state when the sample carries no position.
PoincarePoint embed_joint(const FutureSample& sample,
                          const EmbeddingConfig& cfg);

}  // namespace atcpg
