#pragma once

#include "fuzzystab/control.hpp"
#include "fuzzystab/functions.hpp"
#include "fuzzystab/fuzzy_norm.hpp"
#include "fuzzystab/hyers.hpp"
#include "fuzzystab/types.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace fuzzystab {

/// f(x+y) + f(x-y) - 2 f(x) - 2 f(y).
Vec quadratic_defect(const EvaluatedFunction& f, const Vec& x, const Vec& y);
Vec quadratic_defect(const FunctionSpec& f, const Vec& x, const Vec& y);

/// f(x+y) + f(x-y) - 2 g(x) - 2 h(y).
Vec pexider_defect(const PexiderTriple& triple, const Vec& x, const Vec& y);

struct ReportRow {
  int xId = 0;
  double t = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // lhs - rhs
  bool pass = false;    // margin >= -slack
};

struct StabilityReport {
  std::string scenario;
  std::string inequalityId;
  std::vector<ReportRow> rows;
  double minMargin = std::numeric_limits<double>::infinity();
  int failCount = 0;
  int convergenceFailures = 0;
  double slack = kMembershipSlack;

  void add(int xId, double t, double lhs, double rhs);
  bool pass() const { return failCount == 0 && convergenceFailures == 0; }
};

/// Combined control bound: min over {(x,x), (x,0), (0,x)} of the membership
/// of phi at t/3 under fnZ. Zero for t <= 0.
Membership n_doubleprime(const ControlFunction& phi, const FuzzyNorm& fnZ, const Vec& x, double t);

/// Six-term variant that also includes the reflected pairs (-x,-x), (-x,0),
/// (0,-x).
Membership m_combined(const ControlFunction& phi, const FuzzyNorm& fnZ, const Vec& x, double t);

/// Membership of the quadratic defect at t+s dominates
/// min(N_X(x, t^q), N_X(y, s^q)) over the sampled pairs and (s, t) values.
/// Rows carry t+s in the t column. Requires q > 0, q != 1/2.
StabilityReport check_q_almost(const FunctionSpec& f, const FuzzyNorm& fnX, const FuzzyNorm& fnY,
                               double q, const std::vector<std::pair<Vec, Vec>>& pairs,
                               const std::vector<std::vector<std::pair<double, double>>>& stPairs,
                               double slack = kMembershipSlack);

/// Convenience: diagonal (t, t) over the grid plus `offDiagonal` random
/// pairs per sample, drawn log-uniformly with the given seed.
std::vector<std::vector<std::pair<double, double>>> make_st_pairs(const TGrid& grid,
                                                                  std::size_t sampleCount,
                                                                  int offDiagonal,
                                                                  std::uint64_t seed);

/// Membership of the Pexider defect dominates the membership of phi.
StabilityReport check_control_bounded(const PexiderTriple& triple, const ControlFunction& phi,
                                      const FuzzyNorm& fnY, const FuzzyNorm& fnZ,
                                      const std::vector<std::pair<Vec, Vec>>& pairs,
                                      const TGrid& grid, double slack = kMembershipSlack);

struct VerifyOptions {
  HyersOptions hyers;
  double slack = kMembershipSlack;
};

/// Direct quadratic bound plus its sharper variant; ids "theorem1" and
/// "remark22". Non-convergent samples are counted, remaining samples still
/// produce rows.
std::vector<StabilityReport> verify_theorem1(const FunctionSpec& f, const FuzzyNorm& fnX,
                                             const FuzzyNorm& fnY, double q,
                                             const std::vector<Vec>& xs, const TGrid& grid,
                                             const VerifyOptions& opt = {});

/// Odd-case Pexider bounds; ids "prop1.f" and "prop1.gh". Odd parts are taken
/// internally.
std::vector<StabilityReport> verify_prop1(const PexiderTriple& triple, const ControlFunction& phi,
                                          const FuzzyNorm& fnY, const FuzzyNorm& fnZ,
                                          const std::vector<Vec>& xs, const TGrid& grid,
                                          const VerifyOptions& opt = {});

/// Even-case Pexider bounds; ids "prop2.f", "prop2.g", "prop2.h". Requires
/// the triple to vanish at the origin.
std::vector<StabilityReport> verify_prop2(const PexiderTriple& triple, const ControlFunction& phi,
                                          const FuzzyNorm& fnY, const FuzzyNorm& fnZ,
                                          const std::vector<Vec>& xs, const TGrid& grid,
                                          const VerifyOptions& opt = {});

/// Combined additive+quadratic split bound; id "theorem3". Requires f(0) = 0.
std::vector<StabilityReport> verify_theorem3(const FunctionSpec& f, const ControlFunction& phi,
                                             const FuzzyNorm& fnY, const FuzzyNorm& fnZ,
                                             const std::vector<Vec>& xs, const TGrid& grid,
                                             const VerifyOptions& opt = {});

/// Classical two-sided check with crisp magnitudes: id "classical.defect"
/// verifies |defect(x,y)| <= |x|^p + |y|^p, id "classical.bound" verifies
/// |Q(x) - f(x)| <= C |x|^p. Throws when C <= 0.
std::vector<StabilityReport> verify_classical(const FunctionSpec& f, double p, double c,
                                              const ClassicalNorm& normX,
                                              const ClassicalNorm& normY,
                                              const std::vector<std::pair<Vec, Vec>>& pairs,
                                              const std::vector<Vec>& xs,
                                              const VerifyOptions& opt = {});

}  // namespace fuzzystab
