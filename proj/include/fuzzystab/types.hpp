#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace fuzzystab {

using Scalar = double;
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Truth degree in [0, 1].
using Membership = double;

/// Absolute slack applied to membership inequalities to absorb rounding.
inline constexpr double kMembershipSlack = 1e-12;

void require_finite(const Vec& x, const char* what);
void require_dim(const Vec& x, Eigen::Index dim, const char* what);

/// Strictly increasing positive grid used to discretize "for all t > 0".
class TGrid {
 public:
  static TGrid logarithmic(double tMin, double tMax, int count);
  /// 64 log-spaced points spanning [1e-3, 1e6].
  static TGrid standard() { return logarithmic(1e-3, 1e6, 64); }

  const std::vector<double>& points() const { return points_; }
  double tMin() const { return points_.front(); }
  double tMax() const { return points_.back(); }
  int count() const { return static_cast<int>(points_.size()); }

 private:
  TGrid() = default;
  std::vector<double> points_;
};

}  // namespace fuzzystab
