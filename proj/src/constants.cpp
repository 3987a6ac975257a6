#include "fuzzystab/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace fuzzystab {
namespace {

// pow with an exact shortcut at q = 1 so linear rhs arguments stay bitwise
// clean.
double pow_q(double base, double q) { return q == 1.0 ? base : std::pow(base, q); }

double require_alpha(double alpha, double upper, const char* what) {
  const double a = std::abs(alpha);
  if (!std::isfinite(a) || a <= 0.0 || a >= upper) {
    throw std::domain_error(std::string(what) + ": |alpha| must lie strictly between 0 and " +
                            (upper == 2.0 ? "2" : "4"));
  }
  return a;
}

}  // namespace

StabilityConstant theorem1_constant(double q) {
  if (!std::isfinite(q) || !(q > 0.5)) {
    throw std::domain_error("theorem1 constant: q must exceed 1/2");
  }
  const double p = 1.0 / q;
  const double base = (std::exp2(2.0 - p) - 1.0) / 4.0;
  return {"theorem1", pow_q(base, q), "q > 1/2"};
}

StabilityConstant remark22_constant(double q) {
  if (!std::isfinite(q) || !(q > 0.5)) {
    throw std::domain_error("remark22 constant: q must exceed 1/2");
  }
  const double p = 1.0 / q;
  const double base = (std::exp2(2.0 - p) - 1.0) / 2.0;
  return {"remark22", pow_q(base, q), "q > 1/2"};
}

std::pair<StabilityConstant, StabilityConstant> prop1_constants(double alpha) {
  const double a = require_alpha(alpha, 2.0, "prop1 constants");
  StabilityConstant first{"prop1.f", (2.0 - a) / 4.0, "0 < |alpha| < 2"};
  StabilityConstant second{"prop1.gh", (6.0 - 3.0 * a) / (14.0 - a), "0 < |alpha| < 2"};
  return {first, second};
}

std::pair<StabilityConstant, StabilityConstant> prop2_constants(double alpha) {
  const double a = require_alpha(alpha, 4.0, "prop2 constants");
  StabilityConstant first{"prop2.f", (4.0 - a) / 16.0, "0 < |alpha| < 4"};
  StabilityConstant second{"prop2.gh", (12.0 - 3.0 * a) / (52.0 - a), "0 < |alpha| < 4"};
  return {first, second};
}

StabilityConstant theorem3_constant(double alpha) {
  const double a = require_alpha(alpha, 2.0, "theorem3 constant");
  const double v = std::min((2.0 - a) / 8.0, (4.0 - a) / 32.0);
  return {"theorem3", v, "0 < |alpha| < 2"};
}

double classical_preset_constant(double p, bool* valid) {
  if (!std::isfinite(p)) throw std::domain_error("classical preset: p must be finite");
  const double denom = std::exp2(2.0 - p) - 1.0;
  const double value = 4.0 / denom;
  if (valid) *valid = p < 2.0 && denom > 0.0;
  return value;
}

}  // namespace fuzzystab
