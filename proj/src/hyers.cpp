#include "fuzzystab/hyers.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace fuzzystab {

bool is_quadratic(IterationKind kind) {
  return kind == IterationKind::DirectQuadratic || kind == IterationKind::DualQuadratic;
}

bool is_direct(IterationKind kind) {
  return kind == IterationKind::DirectQuadratic || kind == IterationKind::DirectAdditive;
}

const char* to_string(IterationKind kind) {
  switch (kind) {
    case IterationKind::DirectQuadratic: return "directQuadratic";
    case IterationKind::DirectAdditive: return "directAdditive";
    case IterationKind::DualQuadratic: return "dualQuadratic";
    case IterationKind::DualAdditive: return "dualAdditive";
  }
  return "unknown";
}

namespace {
constexpr double kArgLimit = 1e150;
}

Vec iterate(const EvaluatedFunction& f, const Vec& x, IterationKind kind, int n) {
  if (!f.eval) throw std::invalid_argument("iterate: function is empty");
  if (n < 0) throw std::invalid_argument("iterate: index must be nonnegative");
  require_finite(x, "iterate");

  const double argScale = is_direct(kind) ? std::exp2(static_cast<double>(n))
                                          : std::exp2(static_cast<double>(-n));
  const Vec arg = argScale * x;
  if (!arg.allFinite() || (arg.size() > 0 && arg.lpNorm<Eigen::Infinity>() > kArgLimit)) {
    throw std::overflow_error("iterate: scaled argument 2^n x left the representable range");
  }
  const double e = is_quadratic(kind) ? 2.0 * n : 1.0 * n;
  const double valScale = is_direct(kind) ? std::exp2(-e) : std::exp2(e);
  Vec value = valScale * f.eval(arg);
  if (!value.allFinite()) {
    throw std::overflow_error("iterate: scaled value left the representable range");
  }
  return value;
}

HyersTrace run_trace(const EvaluatedFunction& f, const Vec& x, IterationKind kind,
                     const FuzzyNorm& fnY, const TGrid& grid, const HyersOptions& opt) {
  if (!(opt.tol > 0.0)) throw std::invalid_argument("run_trace: tol must be positive");
  if (!(opt.eps > 0.0) || opt.eps >= 1.0) {
    throw std::invalid_argument("run_trace: eps must lie in (0, 1)");
  }
  if (opt.maxN < 1) throw std::invalid_argument("run_trace: maxN must be positive");
  if (opt.startOffset < 0) throw std::invalid_argument("run_trace: startOffset must be >= 0");

  HyersTrace tr;
  tr.x = x;
  tr.kind = kind;
  tr.gridPoints = grid.points();
  tr.iterates.push_back(iterate(f, x, kind, opt.startOffset));

  for (int n = 1; n <= opt.maxN; ++n) {
    Vec next = iterate(f, x, kind, n + opt.startOffset);
    const Vec diff = next - tr.iterates.back();
    const double err = fnY.base()(diff);
    tr.iterates.push_back(std::move(next));
    tr.successiveErrors.push_back(err);

    bool done = err < opt.tol;
    if (done) {
      // The classical tolerance is necessary but not the notion being
      // studied; the step must also be fuzzily close to zero everywhere.
      for (double t : grid.points()) {
        if (!(fnY.eval(diff, t) > 1.0 - opt.eps)) {
          done = false;
          break;
        }
      }
    }
    if (done) {
      tr.converged = true;
      tr.nStop = n;
      break;
    }
  }
  if (!tr.converged) tr.nStop = static_cast<int>(tr.iterates.size()) - 1;

  const Vec& last = tr.iterates.back();
  tr.memberships.resize(tr.iterates.size());
  for (std::size_t n = 0; n < tr.iterates.size(); ++n) {
    tr.memberships[n].reserve(grid.points().size());
    const Vec diff = tr.iterates[n] - last;
    for (double t : grid.points()) tr.memberships[n].push_back(fnY.eval(diff, t));
  }
  return tr;
}

Approximant::Approximant(EvaluatedFunction source, IterationKind kind, FuzzyNorm fnY, TGrid grid,
                         HyersOptions opt)
    : source_(std::move(source)),
      kind_(kind),
      fnY_(std::move(fnY)),
      grid_(std::move(grid)),
      opt_(opt) {
  if (!source_.eval) throw std::invalid_argument("approximant: function is empty");
}

ApproxValue Approximant::operator()(const Vec& x) const {
  std::string key(reinterpret_cast<const char*>(x.data()),
                  static_cast<std::size_t>(x.size()) * sizeof(double));
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  HyersTrace tr = run_trace(source_, x, kind_, fnY_, grid_, opt_);
  ApproxValue v{tr.iterates.back(), tr.converged, tr.nStop};
  std::unique_lock lock(mutex_);
  return memo_.emplace(std::move(key), std::move(v)).first->second;
}

HyersTrace Approximant::trace(const Vec& x) const {
  return run_trace(source_, x, kind_, fnY_, grid_, opt_);
}

Approximant build_approximant(const FunctionSpec& f, IterationKind kind, const FuzzyNorm& fnY,
                              const TGrid& grid, const HyersOptions& opt) {
  return Approximant(evaluated(f), kind, fnY, grid, opt);
}

}  // namespace fuzzystab
