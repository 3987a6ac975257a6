#include "fuzzystab/control.hpp"

#include <cmath>
#include <stdexcept>

namespace fuzzystab {

ControlFunction::ControlFunction(Example34Phi v, double scale) : v_(v), scale_(scale) {
  if (!std::isfinite(v.z0Norm) || v.z0Norm < 0.0) {
    throw std::invalid_argument("control function: z0Norm must be finite and nonnegative");
  }
  if (!std::isfinite(scale) || scale == 0.0) {
    throw std::invalid_argument("control function: scale must be finite and nonzero");
  }
}

ControlFunction::ControlFunction(PowerSum v, double scale) : v_(v), scale_(scale) {
  if (!std::isfinite(v.p) || v.p < 0.0) {
    throw std::invalid_argument("control function: exponent must be finite and nonnegative");
  }
  if (!std::isfinite(scale) || scale == 0.0) {
    throw std::invalid_argument("control function: scale must be finite and nonzero");
  }
}

double ControlFunction::alpha() const {
  if (std::holds_alternative<Example34Phi>(v_)) return std::sqrt(2.0);
  return std::exp2(std::get<PowerSum>(v_).p);
}

double eval_phi(const ControlFunction& phi, const Vec& x, const Vec& y) {
  require_finite(x, "eval_phi");
  require_finite(y, "eval_phi");
  if (x.size() != y.size()) {
    throw std::invalid_argument("eval_phi: arguments must share a dimension");
  }
  const double s = phi.scale();
  if (const auto* e = std::get_if<Example34Phi>(&phi.variant())) {
    const double v =
        std::sqrt((x + y).norm()) + std::sqrt((x - y).norm()) - 2.0 * std::sqrt(y.norm());
    return s * v * e->z0Norm;
  }
  const auto& p = std::get<PowerSum>(phi.variant());
  return s * (std::pow(x.norm(), p.p) + std::pow(y.norm(), p.p));
}

AlphaEstimate estimate_alpha(const ControlFunction& phi,
                             const std::vector<std::pair<Vec, Vec>>& samples,
                             double degenerateCutoff) {
  if (samples.empty()) throw std::invalid_argument("estimate_alpha: no samples");

  AlphaEstimate est;
  std::vector<std::pair<double, double>> usable;  // (phi(x,y), phi(2x,2y))
  usable.reserve(samples.size());
  double sum = 0.0;
  for (const auto& [x, y] : samples) {
    const double base = eval_phi(phi, x, y);
    if (std::abs(base) <= degenerateCutoff) {
      ++est.degenerateSamples;
      continue;
    }
    const double doubled = eval_phi(phi, 2.0 * x, 2.0 * y);
    usable.emplace_back(base, doubled);
    sum += doubled / base;
  }
  if (usable.empty()) {
    throw std::domain_error(
        "estimate_alpha: every sample was degenerate (|phi| below the cutoff); "
        "cannot estimate the doubling factor");
  }
  est.usedSamples = static_cast<int>(usable.size());
  est.alpha = sum / static_cast<double>(usable.size());
  for (const auto& [base, doubled] : usable) {
    const double res = std::abs(doubled - est.alpha * base) / (1.0 + std::abs(base));
    if (res > est.maxResidual) est.maxResidual = res;
  }
  return est;
}

}  // namespace fuzzystab
