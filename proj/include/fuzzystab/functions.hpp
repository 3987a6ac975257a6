#pragma once

#include "fuzzystab/types.hpp"

#include <functional>
#include <variant>

namespace fuzzystab {

/// f(x) = (x^T A x) * direction, A symmetric, |direction| = 1.
struct QuadraticForm {
  Mat a;
  Vec direction;
};

/// f(x) = (x^T A x) * direction + c * |x|^r * direction2 (Euclidean |.|).
/// direction2 defaults to direction when empty.
struct PerturbedQuadratic {
  Mat a;
  Vec direction;
  double c = 0.0;
  double r = 0.0;
  Vec direction2;
};

/// f(x) = (x^T A x) * direction + L x.
struct QuadraticPlusLinear {
  Mat a;
  Vec direction;
  Mat l;
};

/// Componentwise-product algebra on R^d with the sup norm:
/// f(x) = x*x + |x|_inf * x0, |x0| = 1.
struct AlgebraExample {
  Vec x0;
};

/// f(x) = <x, a> x0 + |x|^2 y0 + sqrt(|x|) z0 (Euclidean |.|).
struct InnerProductExample {
  Vec a;
  Vec x0;
  Vec y0;
  Vec z0;
};

/// f(x) = L x.
struct LinearMap {
  Mat l;
};

class FunctionSpec {
 public:
  using Variant = std::variant<QuadraticForm, PerturbedQuadratic, QuadraticPlusLinear,
                               AlgebraExample, InnerProductExample, LinearMap>;

  FunctionSpec(QuadraticForm v);           // NOLINT(google-explicit-constructor)
  FunctionSpec(PerturbedQuadratic v);      // NOLINT
  FunctionSpec(QuadraticPlusLinear v);     // NOLINT
  FunctionSpec(AlgebraExample v);          // NOLINT
  FunctionSpec(InnerProductExample v);     // NOLINT
  FunctionSpec(LinearMap v);               // NOLINT

  int domain_dim() const;
  int codomain_dim() const;
  const Variant& variant() const { return v_; }

 private:
  Variant v_;
};

Vec eval_function(const FunctionSpec& spec, const Vec& x);

/// Type-erased evaluation with its dimensions, for composing parts.
struct EvaluatedFunction {
  std::function<Vec(const Vec&)> eval;
  int domainDim = 0;
  int codomainDim = 0;
};

EvaluatedFunction evaluated(const FunctionSpec& spec);
EvaluatedFunction odd_part(const EvaluatedFunction& f);
EvaluatedFunction even_part(const EvaluatedFunction& f);
EvaluatedFunction odd_part(const FunctionSpec& spec);
EvaluatedFunction even_part(const FunctionSpec& spec);

/// Triple (f, g, h) sharing domain and codomain. Whether all three vanish at
/// the origin is recorded at construction; the even-case verifications
/// require it.
class PexiderTriple {
 public:
  PexiderTriple(FunctionSpec f, FunctionSpec g, FunctionSpec h);

  const FunctionSpec& f() const { return f_; }
  const FunctionSpec& g() const { return g_; }
  const FunctionSpec& h() const { return h_; }
  bool vanishes_at_origin() const { return vanishesAtOrigin_; }
  int domain_dim() const { return f_.domain_dim(); }
  int codomain_dim() const { return f_.codomain_dim(); }

 private:
  FunctionSpec f_, g_, h_;
  bool vanishesAtOrigin_;
};

}  // namespace fuzzystab
