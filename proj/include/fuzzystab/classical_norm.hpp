#pragma once

#include "fuzzystab/types.hpp"

namespace fuzzystab {

enum class NormKind { L1, L2, LInf, InnerProductInduced };

/// Ordinary vector norm on R^d. The inner-product variant is
/// |x| = sqrt(x^T A x) for a symmetric positive definite A.
class ClassicalNorm {
 public:
  static ClassicalNorm l1();
  static ClassicalNorm l2();
  static ClassicalNorm linf();
  static ClassicalNorm inner_product(Mat a);

  double operator()(const Vec& x) const;

  NormKind kind() const { return kind_; }
  /// Only meaningful for the inner-product variant.
  const Mat& matrix() const;

 private:
  explicit ClassicalNorm(NormKind kind) : kind_(kind) {}
  NormKind kind_;
  Mat matrix_;
};

}  // namespace fuzzystab
