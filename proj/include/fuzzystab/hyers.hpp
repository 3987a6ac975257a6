#pragma once

#include "fuzzystab/functions.hpp"
#include "fuzzystab/fuzzy_norm.hpp"
#include "fuzzystab/types.hpp"

#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace fuzzystab {

enum class IterationKind {
  DirectQuadratic,  // f(2^n x) / 4^n
  DirectAdditive,   // f(2^n x) / 2^n
  DualQuadratic,    // 4^n f(x / 2^n)
  DualAdditive,     // 2^n f(x / 2^n)
};

bool is_quadratic(IterationKind kind);
bool is_direct(IterationKind kind);
const char* to_string(IterationKind kind);

/// n-th element of the chosen scheme at x. Throws std::overflow_error when
/// the scaled argument or value leaves the representable range.
Vec iterate(const EvaluatedFunction& f, const Vec& x, IterationKind kind, int n);

struct HyersOptions {
  double tol = 1e-9;   // classical stopping tolerance on successive steps
  double eps = 1e-6;   // fuzzy stopping tolerance (memberships above 1 - eps)
  int maxN = 60;
  int startOffset = 0;
};

struct HyersTrace {
  Vec x;
  IterationKind kind = IterationKind::DirectQuadratic;
  std::vector<Vec> iterates;                            // indices 0..nStop
  std::vector<double> successiveErrors;                 // entry n-1 is |it_n - it_{n-1}|
  std::vector<std::vector<Membership>> memberships;     // [n][tIndex] of (it_n - it_nStop)
  std::vector<double> gridPoints;
  bool converged = false;
  int nStop = 0;

  const Vec& final_value() const { return iterates.back(); }
};

/// Runs the scheme until both the classical and the fuzzy stopping rule hold,
/// or maxN steps elapse. Memberships are taken against fnY on the grid.
HyersTrace run_trace(const EvaluatedFunction& f, const Vec& x, IterationKind kind,
                     const FuzzyNorm& fnY, const TGrid& grid, const HyersOptions& opt = {});

struct ApproxValue {
  Vec value;
  bool converged = false;
  int steps = 0;
};

/// Limit function of a scheme, evaluated on demand and memoized per exact
/// input bit pattern. Safe for concurrent evaluation.
class Approximant {
 public:
  Approximant(EvaluatedFunction source, IterationKind kind, FuzzyNorm fnY, TGrid grid,
              HyersOptions opt = {});

  ApproxValue operator()(const Vec& x) const;
  HyersTrace trace(const Vec& x) const;  // uncached

  IterationKind iteration() const { return kind_; }
  bool quadratic() const { return is_quadratic(kind_); }

 private:
  EvaluatedFunction source_;
  IterationKind kind_;
  FuzzyNorm fnY_;
  TGrid grid_;
  HyersOptions opt_;
  mutable std::unordered_map<std::string, ApproxValue> memo_;
  mutable std::shared_mutex mutex_;
};

Approximant build_approximant(const FunctionSpec& f, IterationKind kind, const FuzzyNorm& fnY,
                              const TGrid& grid, const HyersOptions& opt = {});

}  // namespace fuzzystab
