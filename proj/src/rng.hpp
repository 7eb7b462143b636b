#pragma once

#include <cmath>
#include <cstdint>

namespace atcpg {

// splitmix64; used both as the stream core and to derive substream seeds,
// so runs are reproducible independent of the platform's <random> internals.
inline uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class RngStream {
 public:
  explicit RngStream(uint64_t seed) : state_(mix64(seed ^ 0xa076bc5c5e4a3bd1ULL)) {}

  static RngStream derive(uint64_t seed, uint64_t tag) {
    return RngStream(mix64(seed) ^ mix64(tag * 0x9e3779b97f4a7c15ULL + tag));
  }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // [0, 1)
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  double normal(double mean = 0.0, double stddev = 1.0) {
    // Box-Muller, cosine branch only; u1 shifted into (0,1] so log stays finite
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  uint64_t state_;
};

}  // namespace atcpg
