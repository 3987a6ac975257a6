#pragma once

#include "fuzzystab/fuzzy_norm.hpp"
#include "fuzzystab/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fuzzystab {

/// A membership function under test. `base` is the underlying classical norm
/// when one exists; it enables the closed-form "N(x,.) = 1 only for x = 0"
/// probe, which is undecidable from finitely many samples otherwise.
struct FuzzyNormCandidate {
  std::string name;
  std::function<Membership(const Vec&, double)> membership;
  std::optional<ClassicalNorm> base;
};

FuzzyNormCandidate candidate(const FuzzyNorm& fn, std::string name);

/// Deliberately broken fixture: evaluates t / (t + k |x|) for every real t,
/// so it returns nonzero values at t <= 0.
FuzzyNormCandidate nk_without_positivity_guard(ClassicalNorm base, double k);

struct AxiomCounterexample {
  std::string detail;  // human-readable description of the violating tuple
  int xIndex = -1;
  double t = 0.0;
  double s = 0.0;
  double scalar = 0.0;
  double observed = 0.0;
  double required = 0.0;
};

struct AxiomCheck {
  bool pass = true;
  long tuplesChecked = 0;
  double worstMargin = 1.0;  // min over tuples; pass requires >= -slack
  std::optional<AxiomCounterexample> counterexample;
  std::string note;
};

struct AxiomReport {
  AxiomCheck range;        // values stay within [0, 1]
  AxiomCheck vanishing;    // N(x, c) = 0 for c <= 0
  AxiomCheck identity;     // N(x, .) = 1 on t > 0 iff x = 0
  AxiomCheck homogeneity;  // N(c x, t) = N(x, t / |c|) for c != 0
  AxiomCheck additivity;   // N(x + y, s + t) >= min(N(x, s), N(y, t))
  AxiomCheck monotone;     // nondecreasing in t with limit 1

  bool allPass() const;
  long totalTuples() const;
};

struct AxiomOptions {
  double slack = 1e-12;
  double tInfinity = 1e9;      // stand-in for the t -> infinity limit
  double limitEpsilon = 1e-6;  // limit check: N(x, tInfinity) >= 1 - this
  int offDiagonalPairs = 32;   // random (s, t) pairs per additivity sample
  std::uint64_t pairSeed = 0x9e3779b97f4a7c15ull;
};

AxiomReport check_axioms(const FuzzyNormCandidate& cand, const std::vector<Vec>& xSamples,
                         const TGrid& grid, const std::vector<double>& scalars,
                         const AxiomOptions& opt = {});

}  // namespace fuzzystab
