#include "fuzzystab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace fuzzystab {

double log_uniform(SplitMix64& rng, double lo, double hi) {
  if (!(lo > 0.0) || !(hi > lo)) {
    throw std::invalid_argument("log_uniform: bounds must satisfy 0 < lo < hi");
  }
  const double u = rng.next_double();
  return std::exp(std::log(lo) + u * (std::log(hi) - std::log(lo)));
}

Vec sample_ball(SplitMix64& rng, int dim, double radius) {
  if (dim < 1) throw std::invalid_argument("sample_ball: dimension must be positive");
  if (!(radius > 0.0)) throw std::invalid_argument("sample_ball: radius must be positive");
  Vec x(dim);
  // Rejection from the cube keeps the generator free of transcendentals, so
  // samples are bit-identical wherever IEEE doubles are.
  while (true) {
    for (int i = 0; i < dim; ++i) x[i] = rng.uniform(-radius, radius);
    if (x.norm() <= radius) return x;
  }
}

std::vector<Vec> sample_ball_many(SplitMix64& rng, int dim, double radius, int count) {
  if (count < 0) throw std::invalid_argument("sample_ball_many: count must be nonnegative");
  std::vector<Vec> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(sample_ball(rng, dim, radius));
  return out;
}

}  // namespace fuzzystab
