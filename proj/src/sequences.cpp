#include "fuzzystab/sequences.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace fuzzystab {

Sequence Sequence::from_vectors(std::vector<Vec> values) {
  if (values.empty()) throw std::invalid_argument("sequence: need at least one element");
  const auto dim = values.front().size();
  for (const Vec& v : values) require_dim(v, dim, "sequence element");
  Sequence s;
  s.count_ = static_cast<int>(values.size());
  s.values_ = std::move(values);
  return s;
}

Sequence Sequence::from_generator(std::function<Vec(int)> gen, int count) {
  if (!gen) throw std::invalid_argument("sequence: generator is empty");
  if (count < 1) throw std::invalid_argument("sequence: need at least one element");
  Sequence s;
  s.count_ = count;
  s.gen_ = std::move(gen);
  return s;
}

Vec Sequence::at(int n) const {
  if (n < 0 || n >= count_) throw std::out_of_range("sequence index out of range");
  return gen_ ? gen_(n) : values_[n];
}

namespace {

// Worst membership of (seq[n] - reference(n)) over one index range and the
// whole grid.
template <typename Diff>
void scan(int from, int to, const FuzzyNorm& fn, const TGrid& grid, Diff&& diff,
          SequenceVerdict& out) {
  for (int n = from; n < to; ++n) {
    const Vec d = diff(n);
    for (double t : grid.points()) {
      const Membership m = fn.eval(d, t);
      if (m < out.worstMembership) {
        out.worstMembership = m;
        out.worstIndex = n;
        out.worstT = t;
      }
    }
  }
}

}  // namespace

SequenceVerdict fuzzy_converged(const Sequence& seq, const Vec& limit, const FuzzyNorm& fn,
                                const TGrid& grid, double eps, int window) {
  if (!(eps > 0.0) || eps >= 1.0) {
    throw std::invalid_argument("fuzzy_converged: eps must lie in (0, 1)");
  }
  if (window < 1) throw std::invalid_argument("fuzzy_converged: window must be positive");
  require_finite(limit, "fuzzy_converged limit");

  SequenceVerdict v;
  const int from = std::max(0, seq.size() - window);
  scan(from, seq.size(), fn, grid, [&](int n) { return Vec(seq.at(n) - limit); }, v);
  v.verdict = v.worstMembership > 1.0 - eps;
  v.n0 = v.verdict ? from : -1;
  return v;
}

SequenceVerdict fuzzy_cauchy(const Sequence& seq, const FuzzyNorm& fn, const TGrid& grid,
                             double eps, const CauchyOptions& opt) {
  if (!(eps > 0.0) || eps >= 1.0) {
    throw std::invalid_argument("fuzzy_cauchy: eps must lie in (0, 1)");
  }
  if (opt.pMax < 1) throw std::invalid_argument("fuzzy_cauchy: pMax must be positive");
  if (seq.size() < 2) throw std::invalid_argument("fuzzy_cauchy: need at least two elements");

  // For each start index, the worst membership over n >= n0 and offsets up
  // to pMax. Computed backwards so each start index costs one extra layer.
  const int last = seq.size() - 1;
  SequenceVerdict best;
  best.verdict = false;

  std::vector<Membership> worstFrom(seq.size(), 1.0);
  Membership running = 1.0;
  int smallest = -1;
  for (int n0 = last - 1; n0 >= 0; --n0) {
    SequenceVerdict layer;
    const int pTo = std::min(opt.pMax, last - n0);
    for (int p = 1; p <= pTo; ++p) {
      const Vec d = seq.at(n0 + p) - seq.at(n0);
      for (double t : grid.points()) {
        const Membership m = fn.eval(d, t);
        if (m < layer.worstMembership) {
          layer.worstMembership = m;
          layer.worstIndex = n0;
          layer.worstT = t;
        }
      }
    }
    if (layer.worstMembership < running) {
      running = layer.worstMembership;
      best.worstIndex = layer.worstIndex;
      best.worstT = layer.worstT;
    }
    worstFrom[n0] = running;
    if (running > 1.0 - eps) smallest = n0;
  }

  best.worstMembership = worstFrom.front();
  best.verdict = smallest >= 0;
  best.n0 = smallest;
  if (best.verdict && best.worstIndex < 0) {
    best.worstIndex = 0;
  }
  return best;
}

}  // namespace fuzzystab
