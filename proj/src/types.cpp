#include "fuzzystab/types.hpp"

#include <cmath>
#include <string>

namespace fuzzystab {

void require_finite(const Vec& x, const char* what) {
  if (!x.allFinite()) {
    throw std::invalid_argument(std::string(what) + ": vector has non-finite entries");
  }
}

void require_dim(const Vec& x, Eigen::Index dim, const char* what) {
  if (x.size() != dim) {
    throw std::invalid_argument(std::string(what) + ": expected dimension " +
                                std::to_string(dim) + ", got " + std::to_string(x.size()));
  }
}

TGrid TGrid::logarithmic(double tMin, double tMax, int count) {
  if (!(tMin > 0.0) || !std::isfinite(tMin)) {
    throw std::invalid_argument("tGrid: tMin must be positive and finite");
  }
  if (!(tMax > tMin) || !std::isfinite(tMax)) {
    throw std::invalid_argument("tGrid: tMax must exceed tMin and be finite");
  }
  if (count < 2) {
    throw std::invalid_argument("tGrid: count must be at least 2");
  }
  TGrid g;
  g.points_.resize(count);
  const double logMin = std::log(tMin);
  const double logMax = std::log(tMax);
  for (int i = 0; i < count; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(count - 1);
    g.points_[i] = std::exp(logMin + u * (logMax - logMin));
  }
  // Pin the endpoints so the configured bounds are hit exactly.
  g.points_.front() = tMin;
  g.points_.back() = tMax;
  return g;
}

}  // namespace fuzzystab
