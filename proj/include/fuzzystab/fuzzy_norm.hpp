#pragma once

#include "fuzzystab/classical_norm.hpp"
#include "fuzzystab/types.hpp"

#include <utility>
#include <vector>

namespace fuzzystab {

enum class FuzzyNormKind {
  /// N(x, t) = t / (t + k |x|) for t > 0, else 0.
  NkFromClassical,
  /// N(x, t) = 1 if t > |x|, else 0.
  CrispFromClassical,
};

class FuzzyNorm {
 public:
  static FuzzyNorm nk(ClassicalNorm base, double k);
  static FuzzyNorm crisp(ClassicalNorm base);

  Membership eval(const Vec& x, double t) const;
  /// One-dimensional shortcut for scalar-valued arguments.
  Membership eval_scalar(double value, double t) const;

  FuzzyNormKind kind() const { return kind_; }
  double k() const { return k_; }
  const ClassicalNorm& base() const { return base_; }

 private:
  FuzzyNorm(FuzzyNormKind kind, ClassicalNorm base, double k)
      : kind_(kind), base_(std::move(base)), k_(k) {}
  FuzzyNormKind kind_;
  ClassicalNorm base_;
  double k_;
};

Membership eval_norm(const FuzzyNorm& fn, const Vec& x, double t);

/// Samples t -> N(x, t) along a grid; pairs come back in grid order.
std::vector<std::pair<double, Membership>> membership_curve(const FuzzyNorm& fn, const Vec& x,
                                                            const TGrid& grid);

}  // namespace fuzzystab
