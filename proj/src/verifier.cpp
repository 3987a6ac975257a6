#include "fuzzystab/verifier.hpp"

#include "fuzzystab/constants.hpp"
#include "fuzzystab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace fuzzystab {
namespace {

double pow_q(double base, double q) { return q == 1.0 ? base : std::pow(base, q); }

void require_pair_dims(const Vec& x, const Vec& y, int dim, const char* what) {
  require_finite(x, what);
  require_finite(y, what);
  require_dim(x, dim, what);
  require_dim(y, dim, what);
}

}  // namespace

Vec quadratic_defect(const EvaluatedFunction& f, const Vec& x, const Vec& y) {
  require_pair_dims(x, y, f.domainDim, "quadratic_defect");
  return f.eval(x + y) + f.eval(x - y) - 2.0 * f.eval(x) - 2.0 * f.eval(y);
}

Vec quadratic_defect(const FunctionSpec& f, const Vec& x, const Vec& y) {
  return quadratic_defect(evaluated(f), x, y);
}

Vec pexider_defect(const PexiderTriple& triple, const Vec& x, const Vec& y) {
  require_pair_dims(x, y, triple.domain_dim(), "pexider_defect");
  return eval_function(triple.f(), x + y) + eval_function(triple.f(), x - y) -
         2.0 * eval_function(triple.g(), x) - 2.0 * eval_function(triple.h(), y);
}

void StabilityReport::add(int xId, double t, double lhs, double rhs) {
  ReportRow row;
  row.xId = xId;
  row.t = t;
  row.lhs = lhs;
  row.rhs = rhs;
  row.margin = lhs - rhs;
  row.pass = row.margin >= -slack;
  if (row.margin < minMargin) minMargin = row.margin;
  if (!row.pass) ++failCount;
  rows.push_back(row);
}

Membership n_doubleprime(const ControlFunction& phi, const FuzzyNorm& fnZ, const Vec& x,
                         double t) {
  if (!(t > 0.0)) return 0.0;
  const Vec zero = Vec::Zero(x.size());
  const double t3 = t / 3.0;
  const Membership a = fnZ.eval_scalar(eval_phi(phi, x, x), t3);
  const Membership b = fnZ.eval_scalar(eval_phi(phi, x, zero), t3);
  const Membership c = fnZ.eval_scalar(eval_phi(phi, zero, x), t3);
  return std::min(std::min(a, b), c);
}

Membership m_combined(const ControlFunction& phi, const FuzzyNorm& fnZ, const Vec& x, double t) {
  if (!(t > 0.0)) return 0.0;
  const Vec zero = Vec::Zero(x.size());
  const Vec mx = -x;
  const double t3 = t / 3.0;
  Membership m = fnZ.eval_scalar(eval_phi(phi, x, x), t3);
  m = std::min(m, fnZ.eval_scalar(eval_phi(phi, mx, mx), t3));
  m = std::min(m, fnZ.eval_scalar(eval_phi(phi, x, zero), t3));
  m = std::min(m, fnZ.eval_scalar(eval_phi(phi, zero, x), t3));
  m = std::min(m, fnZ.eval_scalar(eval_phi(phi, mx, zero), t3));
  m = std::min(m, fnZ.eval_scalar(eval_phi(phi, zero, mx), t3));
  return m;
}

std::vector<std::vector<std::pair<double, double>>> make_st_pairs(const TGrid& grid,
                                                                  std::size_t sampleCount,
                                                                  int offDiagonal,
                                                                  std::uint64_t seed) {
  if (offDiagonal < 0) throw std::invalid_argument("make_st_pairs: offDiagonal must be >= 0");
  SplitMix64 rng(seed);
  std::vector<std::vector<std::pair<double, double>>> out(sampleCount);
  for (auto& pairs : out) {
    pairs.reserve(grid.points().size() + offDiagonal);
    for (double t : grid.points()) pairs.emplace_back(t, t);
    for (int i = 0; i < offDiagonal; ++i) {
      const double s = log_uniform(rng, grid.tMin(), grid.tMax());
      const double t = log_uniform(rng, grid.tMin(), grid.tMax());
      pairs.emplace_back(s, t);
    }
  }
  return out;
}

StabilityReport check_q_almost(const FunctionSpec& f, const FuzzyNorm& fnX, const FuzzyNorm& fnY,
                               double q, const std::vector<std::pair<Vec, Vec>>& pairs,
                               const std::vector<std::vector<std::pair<double, double>>>& stPairs,
                               double slack) {
  if (!std::isfinite(q) || !(q > 0.0) || q == 0.5) {
    throw std::domain_error("check_q_almost: q must be positive and different from 1/2");
  }
  if (stPairs.size() != pairs.size()) {
    throw std::invalid_argument("check_q_almost: stPairs must match the sample pairs");
  }
  StabilityReport rep;
  rep.inequalityId = "q_almost";
  rep.slack = slack;
  const EvaluatedFunction fe = evaluated(f);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [x, y] = pairs[i];
    const Vec defect = quadratic_defect(fe, x, y);
    for (auto [s, t] : stPairs[i]) {
      const Membership lhs = fnY.eval(defect, t + s);
      const Membership rhs = std::min(fnX.eval(x, pow_q(t, q)), fnX.eval(y, pow_q(s, q)));
      rep.add(static_cast<int>(i), t + s, lhs, rhs);
    }
  }
  return rep;
}

StabilityReport check_control_bounded(const PexiderTriple& triple, const ControlFunction& phi,
                                      const FuzzyNorm& fnY, const FuzzyNorm& fnZ,
                                      const std::vector<std::pair<Vec, Vec>>& pairs,
                                      const TGrid& grid, double slack) {
  StabilityReport rep;
  rep.inequalityId = "control_bounded";
  rep.slack = slack;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [x, y] = pairs[i];
    const Vec defect = pexider_defect(triple, x, y);
    const double phiVal = eval_phi(phi, x, y);
    for (double t : grid.points()) {
      rep.add(static_cast<int>(i), t, fnY.eval(defect, t), fnZ.eval_scalar(phiVal, t));
    }
  }
  return rep;
}

std::vector<StabilityReport> verify_theorem1(const FunctionSpec& f, const FuzzyNorm& fnX,
                                             const FuzzyNorm& fnY, double q,
                                             const std::vector<Vec>& xs, const TGrid& grid,
                                             const VerifyOptions& opt) {
  const double c1 = theorem1_constant(q).value;
  const double c2 = remark22_constant(q).value;
  Approximant quad = build_approximant(f, IterationKind::DirectQuadratic, fnY, grid, opt.hyers);

  StabilityReport r1, r2;
  r1.inequalityId = "theorem1";
  r2.inequalityId = "remark22";
  r1.slack = r2.slack = opt.slack;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const ApproxValue qv = quad(xs[i]);
    if (!qv.converged) {
      ++r1.convergenceFailures;
      ++r2.convergenceFailures;
      continue;
    }
    const Vec diff = qv.value - eval_function(f, xs[i]);
    for (double t : grid.points()) {
      const double tq = pow_q(t, q);
      const Membership lhs = fnY.eval(diff, t);
      r1.add(static_cast<int>(i), t, lhs, fnX.eval(xs[i], c1 * tq));
      r2.add(static_cast<int>(i), t, lhs, fnX.eval(xs[i], c2 * tq));
    }
  }
  return {r1, r2};
}

std::vector<StabilityReport> verify_prop1(const PexiderTriple& triple, const ControlFunction& phi,
                                          const FuzzyNorm& fnY, const FuzzyNorm& fnZ,
                                          const std::vector<Vec>& xs, const TGrid& grid,
                                          const VerifyOptions& opt) {
  const auto [c1, c2] = prop1_constants(phi.alpha());
  const EvaluatedFunction fo = odd_part(triple.f());
  const EvaluatedFunction go = odd_part(triple.g());
  const EvaluatedFunction ho = odd_part(triple.h());
  Approximant add(fo, IterationKind::DirectAdditive, fnY, grid, opt.hyers);

  StabilityReport rf, rgh;
  rf.inequalityId = "prop1.f";
  rgh.inequalityId = "prop1.gh";
  rf.slack = rgh.slack = opt.slack;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const ApproxValue tv = add(xs[i]);
    if (!tv.converged) {
      ++rf.convergenceFailures;
      ++rgh.convergenceFailures;
      continue;
    }
    const Vec diffF = fo.eval(xs[i]) - tv.value;
    const Vec diffGH = go.eval(xs[i]) + ho.eval(xs[i]) - tv.value;
    for (double t : grid.points()) {
      rf.add(static_cast<int>(i), t, fnY.eval(diffF, t),
             n_doubleprime(phi, fnZ, xs[i], c1.value * t));
      rgh.add(static_cast<int>(i), t, fnY.eval(diffGH, t),
              n_doubleprime(phi, fnZ, xs[i], c2.value * t));
    }
  }
  return {rf, rgh};
}

std::vector<StabilityReport> verify_prop2(const PexiderTriple& triple, const ControlFunction& phi,
                                          const FuzzyNorm& fnY, const FuzzyNorm& fnZ,
                                          const std::vector<Vec>& xs, const TGrid& grid,
                                          const VerifyOptions& opt) {
  const auto [d1, d2] = prop2_constants(phi.alpha());
  if (!triple.vanishes_at_origin()) {
    throw std::invalid_argument(
        "verify_prop2: the even-case bounds require f(0) = g(0) = h(0) = 0");
  }
  const EvaluatedFunction fe = even_part(triple.f());
  const EvaluatedFunction ge = even_part(triple.g());
  const EvaluatedFunction he = even_part(triple.h());
  Approximant quad(fe, IterationKind::DirectQuadratic, fnY, grid, opt.hyers);

  StabilityReport rf, rg, rh;
  rf.inequalityId = "prop2.f";
  rg.inequalityId = "prop2.g";
  rh.inequalityId = "prop2.h";
  rf.slack = rg.slack = rh.slack = opt.slack;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const ApproxValue qv = quad(xs[i]);
    if (!qv.converged) {
      ++rf.convergenceFailures;
      ++rg.convergenceFailures;
      ++rh.convergenceFailures;
      continue;
    }
    const Vec diffF = fe.eval(xs[i]) - qv.value;
    const Vec diffG = ge.eval(xs[i]) - qv.value;
    const Vec diffH = he.eval(xs[i]) - qv.value;
    for (double t : grid.points()) {
      rf.add(static_cast<int>(i), t, fnY.eval(diffF, t),
             n_doubleprime(phi, fnZ, xs[i], d1.value * t));
      rg.add(static_cast<int>(i), t, fnY.eval(diffG, t),
             n_doubleprime(phi, fnZ, xs[i], d2.value * t));
      rh.add(static_cast<int>(i), t, fnY.eval(diffH, t),
             n_doubleprime(phi, fnZ, xs[i], d2.value * t));
    }
  }
  return {rf, rg, rh};
}

std::vector<StabilityReport> verify_theorem3(const FunctionSpec& f, const ControlFunction& phi,
                                             const FuzzyNorm& fnY, const FuzzyNorm& fnZ,
                                             const std::vector<Vec>& xs, const TGrid& grid,
                                             const VerifyOptions& opt) {
  const double c = theorem3_constant(phi.alpha()).value;
  const Vec zero = Vec::Zero(f.domain_dim());
  if (eval_function(f, zero).lpNorm<Eigen::Infinity>() > 1e-12) {
    throw std::invalid_argument("verify_theorem3: f(0) = 0 is required");
  }
  Approximant add(odd_part(f), IterationKind::DirectAdditive, fnY, grid, opt.hyers);
  Approximant quad(even_part(f), IterationKind::DirectQuadratic, fnY, grid, opt.hyers);

  StabilityReport rep;
  rep.inequalityId = "theorem3";
  rep.slack = opt.slack;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const ApproxValue tv = add(xs[i]);
    const ApproxValue qv = quad(xs[i]);
    if (!tv.converged || !qv.converged) {
      ++rep.convergenceFailures;
      continue;
    }
    const Vec residual = eval_function(f, xs[i]) - tv.value - qv.value;
    for (double t : grid.points()) {
      rep.add(static_cast<int>(i), t, fnY.eval(residual, t),
              m_combined(phi, fnZ, xs[i], c * t));
    }
  }
  return {rep};
}

std::vector<StabilityReport> verify_classical(const FunctionSpec& f, double p, double c,
                                              const ClassicalNorm& normX,
                                              const ClassicalNorm& normY,
                                              const std::vector<std::pair<Vec, Vec>>& pairs,
                                              const std::vector<Vec>& xs,
                                              const VerifyOptions& opt) {
  if (!std::isfinite(p) || p < 0.0) {
    throw std::domain_error("verify_classical: p must be finite and nonnegative");
  }
  if (!std::isfinite(c) || c <= 0.0) {
    throw std::domain_error(
        "verify_classical: bound constant must be positive (the preset "
        "4/(2^(2-p)-1) is nonpositive once p >= 2)");
  }

  StabilityReport rDefect, rBound;
  rDefect.inequalityId = "classical.defect";
  rBound.inequalityId = "classical.bound";
  rDefect.slack = rBound.slack = opt.slack;

  const EvaluatedFunction fe = evaluated(f);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [x, y] = pairs[i];
    const double lhs = std::pow(normX(x), p) + std::pow(normX(y), p);
    const double rhs = normY(quadratic_defect(fe, x, y));
    rDefect.add(static_cast<int>(i), 0.0, lhs, rhs);
  }

  // The crisp setting still drives the iteration through the fuzzy engine;
  // a crisp norm over normY reproduces the classical stopping rule.
  Approximant quad(fe, IterationKind::DirectQuadratic, FuzzyNorm::crisp(normY),
                   TGrid::standard(), opt.hyers);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const ApproxValue qv = quad(xs[i]);
    if (!qv.converged) {
      ++rBound.convergenceFailures;
      continue;
    }
    const double lhs = c * std::pow(normX(xs[i]), p);
    const double rhs = normY(qv.value - fe.eval(xs[i]));
    rBound.add(static_cast<int>(i), 0.0, lhs, rhs);
  }
  return {rDefect, rBound};
}

}  // namespace fuzzystab
