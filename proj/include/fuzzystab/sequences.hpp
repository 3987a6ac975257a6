#pragma once

#include "fuzzystab/fuzzy_norm.hpp"
#include "fuzzystab/types.hpp"

#include <functional>
#include <vector>

namespace fuzzystab {

/// Finite prefix of a vector sequence, either stored or generated on demand.
class Sequence {
 public:
  static Sequence from_vectors(std::vector<Vec> values);
  static Sequence from_generator(std::function<Vec(int)> gen, int count);

  int size() const { return count_; }
  Vec at(int n) const;

 private:
  Sequence() = default;
  std::vector<Vec> values_;
  std::function<Vec(int)> gen_;
  int count_ = 0;
};

struct SequenceVerdict {
  bool verdict = false;
  int n0 = -1;             // convergence: first index of the verified window;
                           // Cauchy: smallest admissible start index
  int worstIndex = -1;
  double worstT = 0.0;
  Membership worstMembership = 1.0;
};

/// Fuzzy convergence to `limit`: membership of (x_n - limit) must exceed
/// 1 - eps at every grid point for all n in the trailing window.
SequenceVerdict fuzzy_converged(const Sequence& seq, const Vec& limit, const FuzzyNorm& fn,
                                const TGrid& grid, double eps, int window);

struct CauchyOptions {
  int pMax = 5;  // offsets p = 1..pMax are tested
};

/// Fuzzy Cauchy criterion: membership of (x_{n+p} - x_n) exceeds 1 - eps for
/// all grid points, all tested offsets, and all n >= n0 for some n0.
SequenceVerdict fuzzy_cauchy(const Sequence& seq, const FuzzyNorm& fn, const TGrid& grid,
                             double eps, const CauchyOptions& opt = {});

}  // namespace fuzzystab
