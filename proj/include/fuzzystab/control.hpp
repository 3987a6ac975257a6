#pragma once

#include "fuzzystab/types.hpp"

#include <utility>
#include <variant>
#include <vector>

namespace fuzzystab {

/// phi(x, y) = (sqrt|x + y| + sqrt|x - y| - 2 sqrt|y|) * z0Norm (Euclidean |.|).
/// Doubling both arguments multiplies the value by sqrt(2).
struct Example34Phi {
  double z0Norm = 1.0;
};

/// phi(x, y) = |x|^p + |y|^p. Doubling both arguments multiplies by 2^p.
struct PowerSum {
  double p = 1.0;
};

/// Control function with degree-2 doubling factor alpha:
/// phi(2x, 2y) = alpha * phi(x, y). An optional scalar rescales values
/// without changing alpha.
class ControlFunction {
 public:
  using Variant = std::variant<Example34Phi, PowerSum>;

  ControlFunction(Example34Phi v, double scale = 1.0);  // NOLINT
  ControlFunction(PowerSum v, double scale = 1.0);      // NOLINT

  double alpha() const;
  double scale() const { return scale_; }
  const Variant& variant() const { return v_; }

 private:
  Variant v_;
  double scale_;
};

double eval_phi(const ControlFunction& phi, const Vec& x, const Vec& y);

struct AlphaEstimate {
  double alpha = 0.0;        // mean of phi(2x,2y) / phi(x,y) over usable samples
  double maxResidual = 0.0;  // max |phi(2x,2y) - alpha phi(x,y)| / (1 + |phi(x,y)|)
  int usedSamples = 0;
  int degenerateSamples = 0;
};

/// Samples with |phi(x, y)| <= degenerateCutoff are skipped. Throws if every
/// sample is degenerate.
AlphaEstimate estimate_alpha(const ControlFunction& phi,
                             const std::vector<std::pair<Vec, Vec>>& samples,
                             double degenerateCutoff = 1e-9);

}  // namespace fuzzystab
