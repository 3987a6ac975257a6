#include <doctest.h>

#include "fuzzystab/sequences.hpp"

#include <cmath>

using namespace fuzzystab;

namespace {

Vec unit2() {
  Vec v(2);
  v << 1.0, 0.0;
  return v;
}

// x_n = 2^-n * v, the model convergent sequence. Under the ratio norm with
// k = 1 and the standard grid (t_min = 1e-3, eps = 1e-6) the membership
// threshold is ||d|| < t_min * eps / (1 - eps) ~ 1.000001e-9.
Sequence geometric(int count) {
  return Sequence::from_generator([](int n) { return Vec(std::exp2(-n) * unit2()); }, count);
}

}  // namespace

TEST_CASE("geometric sequence converges fuzzily to zero") {
  const auto fn = FuzzyNorm::nk(ClassicalNorm::l2(), 1.0);
  const auto seq = geometric(45);
  const auto v = fuzzy_converged(seq, Vec::Zero(2), fn, TGrid::standard(), 1e-6, 5);
  CHECK(v.verdict);
  CHECK(v.n0 == 40);
  CHECK(v.worstMembership > 1.0 - 1e-6);
  CHECK(v.worstT == 1e-3);
}

TEST_CASE("wrong limit is rejected") {
  const auto fn = FuzzyNorm::nk(ClassicalNorm::l2(), 1.0);
  const auto seq = geometric(45);
  const auto v = fuzzy_converged(seq, unit2(), fn, TGrid::standard(), 1e-6, 5);
  CHECK_FALSE(v.verdict);
  CHECK(v.n0 == -1);
  CHECK(v.worstMembership < 0.01);
}

TEST_CASE("cauchy start index matches the closed-form threshold") {
  // Worst pair from index n is p = 5: ||x_{n+5} - x_n|| = (1 - 2^-5) 2^-n.
  // The bound 0.96875 * 2^-n < 1.000001e-9 first holds at n = 30.
  const auto fn = FuzzyNorm::nk(ClassicalNorm::l2(), 1.0);
  const auto seq = geometric(45);
  const auto v = fuzzy_cauchy(seq, fn, TGrid::standard(), 1e-6);
  CHECK(v.verdict);
  CHECK(v.n0 == 30);
}

TEST_CASE("alternating sequence is not fuzzy cauchy") {
  const auto fn = FuzzyNorm::nk(ClassicalNorm::l2(), 1.0);
  const auto seq =
      Sequence::from_generator([](int n) { return Vec((n % 2 ? -1.0 : 1.0) * unit2()); }, 40);
  const auto v = fuzzy_cauchy(seq, fn, TGrid::standard(), 1e-6);
  CHECK_FALSE(v.verdict);
  CHECK(v.n0 == -1);
  CHECK(v.worstMembership < 1e-3);
}

TEST_CASE("crisp norm gives all-or-nothing memberships") {
  const auto fn = FuzzyNorm::crisp(ClassicalNorm::l2());
  const auto seq = geometric(45);
  const auto conv = fuzzy_converged(seq, Vec::Zero(2), fn, TGrid::standard(), 0.5, 5);
  CHECK(conv.verdict);
  CHECK(conv.worstMembership == 1.0);
  const auto cauchy = fuzzy_cauchy(seq, fn, TGrid::standard(), 0.5);
  CHECK(cauchy.verdict);
}

TEST_CASE("stored and generated sequences agree") {
  std::vector<Vec> vals;
  for (int n = 0; n < 45; ++n) vals.push_back(std::exp2(-n) * unit2());
  const auto stored = Sequence::from_vectors(vals);
  const auto fn = FuzzyNorm::nk(ClassicalNorm::l2(), 1.0);
  const auto a = fuzzy_cauchy(stored, fn, TGrid::standard(), 1e-6);
  const auto b = fuzzy_cauchy(geometric(45), fn, TGrid::standard(), 1e-6);
  CHECK(a.verdict == b.verdict);
  CHECK(a.n0 == b.n0);
  CHECK(a.worstMembership == b.worstMembership);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(Sequence::from_vectors({}), std::invalid_argument);
  CHECK_THROWS_AS(Sequence::from_generator(nullptr, 5), std::invalid_argument);
  CHECK_THROWS_AS(Sequence::from_generator([](int) { return unit2(); }, 0),
                  std::invalid_argument);

  std::vector<Vec> mixed = {unit2(), Vec::Zero(3)};
  CHECK_THROWS_AS(Sequence::from_vectors(mixed), std::invalid_argument);

  const auto seq = geometric(5);
  CHECK_THROWS_AS(seq.at(-1), std::out_of_range);
  CHECK_THROWS_AS(seq.at(5), std::out_of_range);

  const auto fn = FuzzyNorm::nk(ClassicalNorm::l2(), 1.0);
  CHECK_THROWS_AS(fuzzy_converged(seq, Vec::Zero(2), fn, TGrid::standard(), 0.0, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(fuzzy_converged(seq, Vec::Zero(2), fn, TGrid::standard(), 1e-6, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(fuzzy_cauchy(seq, fn, TGrid::standard(), 1.5), std::invalid_argument);
}
