#pragma once

#include "fuzzystab/types.hpp"

#include <cstdint>
#include <vector>

namespace fuzzystab {

/// SplitMix64. Fixed algorithm so sampled inputs are reproducible across
/// platforms for a given seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

 private:
  std::uint64_t state_;
};

/// Log-uniform in [lo, hi); both bounds must be positive.
double log_uniform(SplitMix64& rng, double lo, double hi);

/// Uniform in the closed Euclidean ball of the given radius, by rejection
/// from the enclosing cube.
Vec sample_ball(SplitMix64& rng, int dim, double radius);

std::vector<Vec> sample_ball_many(SplitMix64& rng, int dim, double radius, int count);

}  // namespace fuzzystab
