#include "fuzzystab/axioms.hpp"

#include "fuzzystab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace fuzzystab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Margin helpers treat any non-finite membership as a hard violation.
double magnitude(double v) { return std::isfinite(v) ? std::abs(v) : kInf; }

double finite_or(double margin) { return std::isfinite(margin) ? margin : -kInf; }

struct Recorder {
  AxiomCheck& chk;
  double slack;

  template <typename MakeCex>
  void tuple(double margin, MakeCex&& makeCex) {
    ++chk.tuplesChecked;
    if (margin < chk.worstMargin) chk.worstMargin = margin;
    if (!(margin >= -slack) && chk.pass) {
      chk.pass = false;
      chk.counterexample = makeCex();
    }
  }
};

AxiomCounterexample cex(std::string detail, int xIndex, double t, double s, double scalar,
                        double observed, double required) {
  AxiomCounterexample c;
  c.detail = std::move(detail);
  c.xIndex = xIndex;
  c.t = t;
  c.s = s;
  c.scalar = scalar;
  c.observed = observed;
  c.required = required;
  return c;
}

std::string describe(const char* axiom, int xIndex, double t, double observed, double required) {
  std::ostringstream os;
  os << axiom << ": x[" << xIndex << "], t = " << t << ", observed " << observed
     << ", required " << required;
  return os.str();
}

}  // namespace

bool AxiomReport::allPass() const {
  return range.pass && vanishing.pass && identity.pass && homogeneity.pass && additivity.pass &&
         monotone.pass;
}

long AxiomReport::totalTuples() const {
  return range.tuplesChecked + vanishing.tuplesChecked + identity.tuplesChecked +
         homogeneity.tuplesChecked + additivity.tuplesChecked + monotone.tuplesChecked;
}

FuzzyNormCandidate candidate(const FuzzyNorm& fn, std::string name) {
  FuzzyNormCandidate c;
  c.name = std::move(name);
  c.membership = [fn](const Vec& x, double t) { return fn.eval(x, t); };
  c.base = fn.base();
  return c;
}

FuzzyNormCandidate nk_without_positivity_guard(ClassicalNorm base, double k) {
  FuzzyNormCandidate c;
  std::ostringstream name;
  name << "nk-unguarded(k=" << k << ")";
  c.name = name.str();
  c.membership = [base, k](const Vec& x, double t) { return t / (t + k * base(x)); };
  c.base = base;
  return c;
}

AxiomReport check_axioms(const FuzzyNormCandidate& cand, const std::vector<Vec>& xSamples,
                         const TGrid& grid, const std::vector<double>& scalars,
                         const AxiomOptions& opt) {
  if (!cand.membership) {
    throw std::invalid_argument("check_axioms: candidate has no membership function");
  }
  if (xSamples.empty()) {
    throw std::invalid_argument("check_axioms: need at least one sample point");
  }
  const auto dim = xSamples.front().size();
  for (const Vec& x : xSamples) {
    require_finite(x, "check_axioms sample");
    require_dim(x, dim, "check_axioms sample");
  }

  const auto& N = cand.membership;
  AxiomReport rep;
  Recorder range{rep.range, opt.slack};
  Recorder vanishing{rep.vanishing, opt.slack};
  Recorder identity{rep.identity, opt.slack};
  Recorder homogeneity{rep.homogeneity, opt.slack};
  Recorder additivity{rep.additivity, opt.slack};
  Recorder monotone{rep.monotone, opt.slack};

  // Values stay in [0, 1] across the positive grid.
  for (std::size_t i = 0; i < xSamples.size(); ++i) {
    for (double t : grid.points()) {
      const double v = N(xSamples[i], t);
      const double margin = finite_or(std::min(v, 1.0 - v));
      range.tuple(margin, [&] {
        return cex(describe("range", static_cast<int>(i), t, v, 0.0), static_cast<int>(i), t, 0.0,
                   0.0, v, 0.0);
      });
    }
  }

  // Vanishing for nonpositive t. The probe at -1 is deliberately first so a
  // missing positivity guard is caught immediately.
  const double nonPositive[] = {-1.0, 0.0, -grid.tMin(), -grid.tMax()};
  for (std::size_t i = 0; i < xSamples.size(); ++i) {
    for (double c : nonPositive) {
      const double v = N(xSamples[i], c);
      const double margin = -magnitude(v);
      vanishing.tuple(margin, [&] {
        return cex(describe("vanishing", static_cast<int>(i), c, v, 0.0), static_cast<int>(i), c,
                   0.0, 0.0, v, 0.0);
      });
    }
  }

  // Identity "if": the zero vector has membership 1 at every positive t.
  const Vec zero = Vec::Zero(dim);
  for (double t : grid.points()) {
    const double v = N(zero, t);
    const double margin = -magnitude(v - 1.0);
    identity.tuple(margin, [&] {
      return cex(describe("identity(zero)", -1, t, v, 1.0), -1, t, 0.0, 0.0, v, 1.0);
    });
  }
  // Identity "only if" needs a decidable zero test, which the underlying
  // classical norm provides. For nonzero x some t must stay clearly below 1.
  if (cand.base) {
    const ClassicalNorm& base = *cand.base;
    for (std::size_t i = 0; i < xSamples.size(); ++i) {
      const double nx = base(xSamples[i]);
      if (!(nx > 0.0)) continue;
      const double probes[] = {nx, nx / 2.0};
      double vmin = kInf;
      for (double t : probes) vmin = std::min(vmin, N(xSamples[i], t));
      const double margin = finite_or((1.0 - 1e-9) - vmin);
      identity.tuple(margin, [&] {
        return cex(describe("identity(nonzero)", static_cast<int>(i), nx, vmin, 1.0 - 1e-9),
                   static_cast<int>(i), nx, 0.0, 0.0, vmin, 1.0 - 1e-9);
      });
    }
  } else {
    rep.identity.note = "only-if direction skipped: candidate has no underlying classical norm";
  }

  // Scaling: N(c x, t) = N(x, t / |c|) for c != 0.
  for (std::size_t i = 0; i < xSamples.size(); ++i) {
    for (double c : scalars) {
      if (c == 0.0) continue;
      for (double t : grid.points()) {
        const double v1 = N(c * xSamples[i], t);
        const double v2 = N(xSamples[i], t / std::abs(c));
        const double margin = -magnitude(v1 - v2);
        homogeneity.tuple(margin, [&] {
          std::ostringstream os;
          os << "homogeneity: x[" << i << "], c = " << c << ", t = " << t << ", N(cx,t) = " << v1
             << ", N(x,t/|c|) = " << v2;
          return cex(os.str(), static_cast<int>(i), t, 0.0, c, v1, v2);
        });
      }
    }
  }

  // Triangle-type bound over pairs of samples and (s, t) values.
  SplitMix64 pairRng(opt.pairSeed);
  const std::size_t n = xSamples.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& x = xSamples[i];
    const Vec& y = xSamples[(i + n / 2 + 1) % n];
    std::vector<std::pair<double, double>> st;
    st.reserve(grid.points().size() + opt.offDiagonalPairs);
    for (double t : grid.points()) st.emplace_back(t, t);
    for (int p = 0; p < opt.offDiagonalPairs; ++p) {
      const double s = log_uniform(pairRng, grid.tMin(), grid.tMax());
      const double t = log_uniform(pairRng, grid.tMin(), grid.tMax());
      st.emplace_back(s, t);
    }
    for (auto [s, t] : st) {
      const double lhs = N(x + y, s + t);
      const double rhs = std::min(N(x, s), N(y, t));
      const double margin = finite_or(lhs - rhs);
      additivity.tuple(margin, [&] {
        std::ostringstream os;
        os << "additivity: x[" << i << "] + x[" << (i + n / 2 + 1) % n << "], s = " << s
           << ", t = " << t << ", N(x+y,s+t) = " << lhs << ", min = " << rhs;
        return cex(os.str(), static_cast<int>(i), t, s, 0.0, lhs, rhs);
      });
    }
  }

  // Monotone in t, with the limit at a large stand-in value.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> ts = {-1.0, 0.0};
    ts.insert(ts.end(), grid.points().begin(), grid.points().end());
    double prev = N(xSamples[i], ts.front());
    for (std::size_t j = 1; j < ts.size(); ++j) {
      const double v = N(xSamples[i], ts[j]);
      const double margin = finite_or(v - prev);
      monotone.tuple(margin, [&] {
        std::ostringstream os;
        os << "monotone: x[" << i << "], t = " << ts[j] << ", value " << v
           << " dropped below previous " << prev;
        return cex(os.str(), static_cast<int>(i), ts[j], 0.0, 0.0, v, prev);
      });
      prev = v;
    }
    const double vLimit = N(xSamples[i], opt.tInfinity);
    const double margin = finite_or(vLimit - (1.0 - opt.limitEpsilon));
    monotone.tuple(margin, [&] {
      return cex(describe("monotone(limit)", static_cast<int>(i), opt.tInfinity, vLimit,
                          1.0 - opt.limitEpsilon),
                 static_cast<int>(i), opt.tInfinity, 0.0, 0.0, vLimit, 1.0 - opt.limitEpsilon);
    });
  }

  return rep;
}

}  // namespace fuzzystab
