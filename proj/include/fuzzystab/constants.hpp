#pragma once

#include <string>
#include <utility>

namespace fuzzystab {

struct StabilityConstant {
  std::string name;
  double value = 0.0;
  std::string validityDomain;
};

/// ((2^{2-p} - 1) / 4)^q with p = 1/q; requires q > 1/2.
StabilityConstant theorem1_constant(double q);

/// Sharper variant ((2^{2-p} - 1) / 2)^q with p = 1/q; requires q > 1/2.
StabilityConstant remark22_constant(double q);

/// Odd-case pair {(2 - |a|) / 4, (6 - 3|a|) / (14 - |a|)}; requires 0 < |a| < 2.
std::pair<StabilityConstant, StabilityConstant> prop1_constants(double alpha);

/// Even-case pair {(4 - |a|) / 16, (12 - 3|a|) / (52 - |a|)}; requires 0 < |a| < 4.
std::pair<StabilityConstant, StabilityConstant> prop2_constants(double alpha);

/// Combined split min{(2 - |a|) / 8, (4 - |a|) / 32}; requires 0 < |a| < 2.
StabilityConstant theorem3_constant(double alpha);

/// Printed classical bound constant 4 / (2^{2-p} - 1). Positive only for
/// p < 2; `valid` reports that, the value is returned either way.
double classical_preset_constant(double p, bool* valid = nullptr);

}  // namespace fuzzystab
