#include "fuzzystab/classical_norm.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <utility>

namespace fuzzystab {

ClassicalNorm ClassicalNorm::l1() { return ClassicalNorm(NormKind::L1); }
ClassicalNorm ClassicalNorm::l2() { return ClassicalNorm(NormKind::L2); }
ClassicalNorm ClassicalNorm::linf() { return ClassicalNorm(NormKind::LInf); }

ClassicalNorm ClassicalNorm::inner_product(Mat a) {
  if (a.rows() == 0 || a.rows() != a.cols()) {
    throw std::invalid_argument("inner-product norm: matrix must be square and nonempty");
  }
  if (!a.allFinite()) {
    throw std::invalid_argument("inner-product norm: matrix has non-finite entries");
  }
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("inner-product norm: matrix must be symmetric");
  }
  Eigen::LLT<Mat> llt(a);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("inner-product norm: matrix must be positive definite");
  }
  ClassicalNorm n(NormKind::InnerProductInduced);
  n.matrix_ = std::move(a);
  return n;
}

double ClassicalNorm::operator()(const Vec& x) const {
  require_finite(x, "classical norm");
  switch (kind_) {
    case NormKind::L1:
      return x.lpNorm<1>();
    case NormKind::L2:
      return x.norm();
    case NormKind::LInf:
      return x.size() == 0 ? 0.0 : x.lpNorm<Eigen::Infinity>();
    case NormKind::InnerProductInduced: {
      require_dim(x, matrix_.rows(), "inner-product norm");
      const double q = x.dot(matrix_ * x);
      return std::sqrt(std::max(q, 0.0));
    }
  }
  throw std::logic_error("unreachable norm kind");
}

const Mat& ClassicalNorm::matrix() const {
  if (kind_ != NormKind::InnerProductInduced) {
    throw std::logic_error("matrix() is only defined for the inner-product norm");
  }
  return matrix_;
}

}  // namespace fuzzystab
