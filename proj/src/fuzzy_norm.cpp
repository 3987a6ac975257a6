#include "fuzzystab/fuzzy_norm.hpp"

#include <cmath>
#include <stdexcept>

namespace fuzzystab {

FuzzyNorm FuzzyNorm::nk(ClassicalNorm base, double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw std::invalid_argument("fuzzy norm: k must be positive and finite");
  }
  return FuzzyNorm(FuzzyNormKind::NkFromClassical, std::move(base), k);
}

FuzzyNorm FuzzyNorm::crisp(ClassicalNorm base) {
  return FuzzyNorm(FuzzyNormKind::CrispFromClassical, std::move(base), 0.0);
}

Membership FuzzyNorm::eval(const Vec& x, double t) const {
  if (std::isnan(t)) {
    throw std::invalid_argument("fuzzy norm: t is NaN");
  }
  const double nx = base_(x);
  switch (kind_) {
    case FuzzyNormKind::NkFromClassical:
      if (!(t > 0.0)) return 0.0;
      if (std::isinf(t)) return 1.0;
      return t / (t + k_ * nx);
    case FuzzyNormKind::CrispFromClassical:
      return t > nx ? 1.0 : 0.0;
  }
  throw std::logic_error("unreachable fuzzy norm kind");
}

Membership FuzzyNorm::eval_scalar(double value, double t) const {
  Vec v(1);
  v[0] = value;
  return eval(v, t);
}

Membership eval_norm(const FuzzyNorm& fn, const Vec& x, double t) { return fn.eval(x, t); }

std::vector<std::pair<double, Membership>> membership_curve(const FuzzyNorm& fn, const Vec& x,
                                                            const TGrid& grid) {
  std::vector<std::pair<double, Membership>> curve;
  curve.reserve(grid.points().size());
  for (double t : grid.points()) {
    curve.emplace_back(t, fn.eval(x, t));
  }
  return curve;
}

}  // namespace fuzzystab
