#include "fuzzystab/functions.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace fuzzystab {
namespace {

void require_symmetric(const Mat& a, const char* what) {
  if (a.rows() == 0 || a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square and nonempty");
  }
  if (!a.allFinite()) {
    throw std::invalid_argument(std::string(what) + ": matrix has non-finite entries");
  }
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument(std::string(what) + ": matrix must be symmetric");
  }
}

void require_unit(const Vec& v, const char* what) {
  require_finite(v, what);
  if (v.size() == 0 || std::abs(v.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument(std::string(what) + ": direction must be a unit vector");
  }
}

}  // namespace

FunctionSpec::FunctionSpec(QuadraticForm v) : v_(std::move(v)) {
  const auto& q = std::get<QuadraticForm>(v_);
  require_symmetric(q.a, "quadratic form");
  require_unit(q.direction, "quadratic form");
}

FunctionSpec::FunctionSpec(PerturbedQuadratic v) : v_(std::move(v)) {
  auto& q = std::get<PerturbedQuadratic>(v_);
  require_symmetric(q.a, "perturbed quadratic");
  require_unit(q.direction, "perturbed quadratic");
  if (!std::isfinite(q.c) || !std::isfinite(q.r) || q.r < 0.0) {
    throw std::invalid_argument("perturbed quadratic: c must be finite, r finite and >= 0");
  }
  if (q.direction2.size() == 0) q.direction2 = q.direction;
  require_unit(q.direction2, "perturbed quadratic");
  if (q.direction2.size() != q.direction.size()) {
    throw std::invalid_argument("perturbed quadratic: directions must share a dimension");
  }
}

FunctionSpec::FunctionSpec(QuadraticPlusLinear v) : v_(std::move(v)) {
  const auto& q = std::get<QuadraticPlusLinear>(v_);
  require_symmetric(q.a, "quadratic-plus-linear");
  require_unit(q.direction, "quadratic-plus-linear");
  if (!q.l.allFinite() || q.l.cols() != q.a.rows() || q.l.rows() != q.direction.size()) {
    throw std::invalid_argument("quadratic-plus-linear: linear part dimensions do not match");
  }
}

FunctionSpec::FunctionSpec(AlgebraExample v) : v_(std::move(v)) {
  const auto& a = std::get<AlgebraExample>(v_);
  require_finite(a.x0, "algebra example");
  if (a.x0.size() == 0 || std::abs(a.x0.lpNorm<Eigen::Infinity>() - 1.0) > 1e-9) {
    throw std::invalid_argument("algebra example: x0 must be a sup-norm unit vector");
  }
}

FunctionSpec::FunctionSpec(InnerProductExample v) : v_(std::move(v)) {
  const auto& e = std::get<InnerProductExample>(v_);
  require_finite(e.a, "inner-product example");
  require_finite(e.x0, "inner-product example");
  require_finite(e.y0, "inner-product example");
  require_finite(e.z0, "inner-product example");
  if (e.a.size() == 0 || e.x0.size() == 0) {
    throw std::invalid_argument("inner-product example: vectors must be nonempty");
  }
  if (e.y0.size() != e.x0.size() || e.z0.size() != e.x0.size()) {
    throw std::invalid_argument("inner-product example: x0, y0, z0 must share a dimension");
  }
}

FunctionSpec::FunctionSpec(LinearMap v) : v_(std::move(v)) {
  const auto& m = std::get<LinearMap>(v_);
  if (m.l.size() == 0 || !m.l.allFinite()) {
    throw std::invalid_argument("linear map: matrix must be nonempty and finite");
  }
}

int FunctionSpec::domain_dim() const {
  return std::visit(
      [](const auto& f) -> int {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, QuadraticForm> || std::is_same_v<T, PerturbedQuadratic> ||
                      std::is_same_v<T, QuadraticPlusLinear>) {
          return static_cast<int>(f.a.rows());
        } else if constexpr (std::is_same_v<T, AlgebraExample>) {
          return static_cast<int>(f.x0.size());
        } else if constexpr (std::is_same_v<T, InnerProductExample>) {
          return static_cast<int>(f.a.size());
        } else {
          return static_cast<int>(f.l.cols());
        }
      },
      v_);
}

int FunctionSpec::codomain_dim() const {
  return std::visit(
      [](const auto& f) -> int {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, QuadraticForm> || std::is_same_v<T, PerturbedQuadratic> ||
                      std::is_same_v<T, QuadraticPlusLinear>) {
          return static_cast<int>(f.direction.size());
        } else if constexpr (std::is_same_v<T, AlgebraExample>) {
          return static_cast<int>(f.x0.size());
        } else if constexpr (std::is_same_v<T, InnerProductExample>) {
          return static_cast<int>(f.x0.size());
        } else {
          return static_cast<int>(f.l.rows());
        }
      },
      v_);
}

Vec eval_function(const FunctionSpec& spec, const Vec& x) {
  require_finite(x, "eval_function");
  require_dim(x, spec.domain_dim(), "eval_function");
  return std::visit(
      [&x](const auto& f) -> Vec {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, QuadraticForm>) {
          return x.dot(f.a * x) * f.direction;
        } else if constexpr (std::is_same_v<T, PerturbedQuadratic>) {
          return x.dot(f.a * x) * f.direction + f.c * std::pow(x.norm(), f.r) * f.direction2;
        } else if constexpr (std::is_same_v<T, QuadraticPlusLinear>) {
          return x.dot(f.a * x) * f.direction + f.l * x;
        } else if constexpr (std::is_same_v<T, AlgebraExample>) {
          return x.cwiseProduct(x) + x.lpNorm<Eigen::Infinity>() * f.x0;
        } else if constexpr (std::is_same_v<T, InnerProductExample>) {
          return x.dot(f.a) * f.x0 + x.squaredNorm() * f.y0 + std::sqrt(x.norm()) * f.z0;
        } else {
          return f.l * x;
        }
      },
      spec.variant());
}

EvaluatedFunction evaluated(const FunctionSpec& spec) {
  return {[spec](const Vec& x) { return eval_function(spec, x); }, spec.domain_dim(),
          spec.codomain_dim()};
}

EvaluatedFunction odd_part(const EvaluatedFunction& f) {
  auto eval = f.eval;
  return {[eval](const Vec& x) { return Vec(0.5 * (eval(x) - eval(-x))); }, f.domainDim,
          f.codomainDim};
}

EvaluatedFunction even_part(const EvaluatedFunction& f) {
  auto eval = f.eval;
  return {[eval](const Vec& x) { return Vec(0.5 * (eval(x) + eval(-x))); }, f.domainDim,
          f.codomainDim};
}

EvaluatedFunction odd_part(const FunctionSpec& spec) { return odd_part(evaluated(spec)); }
EvaluatedFunction even_part(const FunctionSpec& spec) { return even_part(evaluated(spec)); }

PexiderTriple::PexiderTriple(FunctionSpec f, FunctionSpec g, FunctionSpec h)
    : f_(std::move(f)), g_(std::move(g)), h_(std::move(h)) {
  if (g_.domain_dim() != f_.domain_dim() || h_.domain_dim() != f_.domain_dim() ||
      g_.codomain_dim() != f_.codomain_dim() || h_.codomain_dim() != f_.codomain_dim()) {
    throw std::invalid_argument("pexider triple: f, g, h must share domain and codomain");
  }
  const Vec zero = Vec::Zero(f_.domain_dim());
  vanishesAtOrigin_ = eval_function(f_, zero).lpNorm<Eigen::Infinity>() <= 1e-12 &&
                      eval_function(g_, zero).lpNorm<Eigen::Infinity>() <= 1e-12 &&
                      eval_function(h_, zero).lpNorm<Eigen::Infinity>() <= 1e-12;
}

}  // namespace fuzzystab
