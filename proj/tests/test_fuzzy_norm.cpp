#include <doctest.h>

#include "fuzzystab/fuzzy_norm.hpp"
#include "fuzzystab/rng.hpp"

#include <cmath>

using namespace fuzzystab;

namespace {

Vec vec1(double v) {
  Vec x(1);
  x[0] = v;
  return x;
}

Vec vec3(double a, double b, double c) {
  Vec x(3);
  x << a, b, c;
  return x;
}

}  // namespace

TEST_CASE("ratio norm matches its closed form") {
  const auto n1 = FuzzyNorm::nk(ClassicalNorm::l2(), 1.0);
  CHECK(n1.eval(vec1(1.0), 1.0) == 0.5);
  CHECK(n1.eval(vec1(3.0), 1.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(n1.eval(vec1(0.0), 5.0) == 1.0);
  CHECK(n1.eval(vec1(0.0), 1e-9) == 1.0);

  const auto n2 = FuzzyNorm::nk(ClassicalNorm::l2(), 2.0);
  CHECK(n2.eval(vec1(1.0), 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(n2.eval(vec1(-1.0), 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  SUBCASE("nonpositive t always gives zero") {
    CHECK(n1.eval(vec1(1.0), 0.0) == 0.0);
    CHECK(n1.eval(vec1(1.0), -1.0) == 0.0);
    CHECK(n1.eval(vec1(0.0), -1e-3) == 0.0);
    CHECK(n2.eval(vec3(1, 2, 3), -7.5) == 0.0);
  }
}

TEST_CASE("crisp norm is the indicator of t > |x|") {
  const auto fn = FuzzyNorm::crisp(ClassicalNorm::l2());
  CHECK(fn.eval(vec1(2.0), 2.0) == 0.0);
  CHECK(fn.eval(vec1(2.0), 2.5) == 1.0);
  CHECK(fn.eval(vec1(2.0), 1.99) == 0.0);
  CHECK(fn.eval(vec1(0.0), 1e-12) == 1.0);
  CHECK(fn.eval(vec1(0.0), 0.0) == 0.0);
  CHECK(fn.eval(vec1(-3.0), 3.0000001) == 1.0);
}

TEST_CASE("membership curves walk the grid in order") {
  const auto grid = TGrid::logarithmic(1.0, 3.0, 2);
  const auto n1 = FuzzyNorm::nk(ClassicalNorm::l2(), 1.0);
  const auto curve = membership_curve(n1, vec1(1.0), grid);
  REQUIRE(curve.size() == 2);
  CHECK(curve[0].first == 1.0);
  CHECK(curve[0].second == 0.5);
  CHECK(curve[1].first == 3.0);
  CHECK(curve[1].second == doctest::Approx(0.75).epsilon(1e-15));

  const auto crisp = FuzzyNorm::crisp(ClassicalNorm::l2());
  const auto g2 = TGrid::logarithmic(0.5, 2.0, 2);
  const auto c2 = membership_curve(crisp, vec1(1.0), g2);
  CHECK(c2[0].second == 0.0);
  CHECK(c2[1].second == 1.0);

  // The zero vector sits at full membership everywhere.
  for (const auto& [t, m] : membership_curve(n1, vec3(0, 0, 0), TGrid::standard())) {
    CHECK(m == 1.0);
  }
}

TEST_CASE("scaling identity on random inputs") {
  SplitMix64 rng(7);
  const auto fn = FuzzyNorm::nk(ClassicalNorm::l1(), 0.5);
  for (int i = 0; i < 200; ++i) {
    const Vec x = sample_ball(rng, 3, 10.0);
    const double c = rng.uniform(-4.0, 4.0);
    if (c == 0.0) continue;
    const double t = rng.uniform(0.001, 100.0);
    CHECK(fn.eval(c * x, t) == doctest::Approx(fn.eval(x, t / std::abs(c))).epsilon(1e-12));
  }
}

TEST_CASE("triangle-style bound on random inputs") {
  SplitMix64 rng(8);
  for (const auto& fn : {FuzzyNorm::nk(ClassicalNorm::l2(), 1.0),
                         FuzzyNorm::nk(ClassicalNorm::linf(), 2.0),
                         FuzzyNorm::crisp(ClassicalNorm::l1())}) {
    for (int i = 0; i < 200; ++i) {
      const Vec x = sample_ball(rng, 4, 5.0);
      const Vec y = sample_ball(rng, 4, 5.0);
      const double s = rng.uniform(0.01, 50.0);
      const double t = rng.uniform(0.01, 50.0);
      const double lhs = fn.eval(x + y, s + t);
      const double rhs = std::min(fn.eval(x, s), fn.eval(y, t));
      CHECK(lhs >= rhs - 1e-12);
    }
  }
}

TEST_CASE("monotone in t with limit one") {
  const auto fn = FuzzyNorm::nk(ClassicalNorm::l2(), 3.0);
  const Vec x = vec3(1, -2, 2);
  const TGrid grid = TGrid::standard();
  double prev = 0.0;
  for (double t : grid.points()) {
    const double m = fn.eval(x, t);
    CHECK(m >= prev);
    prev = m;
  }
  CHECK(fn.eval(x, 1e9) > 1.0 - 1e-6);
  CHECK(fn.eval(x, std::numeric_limits<double>::infinity()) == 1.0);
}

TEST_CASE("inner-product norm checks its matrix") {
  Mat ok(2, 2);
  ok << 2.0, 0.5, 0.5, 1.0;
  const auto norm = ClassicalNorm::inner_product(ok);
  Vec x(2);
  x << 1.0, -1.0;
  CHECK(norm(x) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  Mat asym(2, 2);
  asym << 1.0, 0.2, 0.0, 1.0;
  CHECK_THROWS_AS(ClassicalNorm::inner_product(asym), std::invalid_argument);

  Mat indef(2, 2);
  indef << 1.0, 0.0, 0.0, -1.0;
  CHECK_THROWS_AS(ClassicalNorm::inner_product(indef), std::invalid_argument);

  CHECK_THROWS_AS(norm(vec3(1, 2, 3)), std::invalid_argument);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(FuzzyNorm::nk(ClassicalNorm::l2(), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(FuzzyNorm::nk(ClassicalNorm::l2(), -1.0), std::invalid_argument);
  const auto fn = FuzzyNorm::nk(ClassicalNorm::l2(), 1.0);
  Vec bad(2);
  bad << 1.0, std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(fn.eval(bad, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(fn.eval(vec1(1.0), std::numeric_limits<double>::quiet_NaN()),
                  std::invalid_argument);
}

TEST_CASE("eval_norm free function and scalar shortcut agree") {
  const auto fn = FuzzyNorm::nk(ClassicalNorm::l2(), 2.0);
  CHECK(eval_norm(fn, vec1(1.5), 3.0) == fn.eval(vec1(1.5), 3.0));
  CHECK(fn.eval_scalar(1.5, 3.0) == fn.eval(vec1(1.5), 3.0));
  CHECK(fn.eval_scalar(-1.5, 3.0) == fn.eval_scalar(1.5, 3.0));
}
