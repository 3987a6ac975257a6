#include "fuzzystab/scenario.hpp"

#include "fuzzystab/constants.hpp"
#include "fuzzystab/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <future>
#include <limits>
#include <set>
#include <sstream>

namespace fuzzystab {
namespace {

using ojson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError("scenario config: " + msg); }

const ojson* find(const ojson& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

double as_number(const ojson& v, const std::string& where) {
  if (!v.is_number()) fail(where + " must be a number");
  return v.get<double>();
}

int as_int(const ojson& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where + " must be an integer");
  return v.get<int>();
}

std::string as_string(const ojson& v, const std::string& where) {
  if (!v.is_string()) fail(where + " must be a string");
  return v.get<std::string>();
}

Vec as_vec(const ojson& v, const std::string& where) {
  if (!v.is_array() || v.empty()) fail(where + " must be a nonempty array of numbers");
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = as_number(v[i], where);
  return out;
}

Mat as_mat(const ojson& v, const std::string& where) {
  if (!v.is_array() || v.empty()) fail(where + " must be a nonempty array of rows");
  const std::size_t rows = v.size();
  std::size_t cols = 0;
  Mat out;
  for (std::size_t i = 0; i < rows; ++i) {
    const Vec row = as_vec(v[i], where + " row");
    if (i == 0) {
      cols = static_cast<std::size_t>(row.size());
      out.resize(rows, cols);
    } else if (static_cast<std::size_t>(row.size()) != cols) {
      fail(where + " rows must have equal length");
    }
    out.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return out;
}

ClassicalNorm parse_classical(const ojson& j, int dim) {
  if (!j.is_object()) fail("classicalNorm must be an object");
  const ojson* kind = find(j, "kind");
  if (!kind) fail("classicalNorm.kind is missing");
  const std::string k = as_string(*kind, "classicalNorm.kind");
  if (k == "l1") return ClassicalNorm::l1();
  if (k == "l2") return ClassicalNorm::l2();
  if (k == "linf") return ClassicalNorm::linf();
  if (k == "innerProduct") {
    const ojson* m = find(j, "matrix");
    if (!m) fail("classicalNorm.matrix is required for kind 'innerProduct'");
    Mat a = as_mat(*m, "classicalNorm.matrix");
    if (a.rows() != dim) fail("classicalNorm.matrix must be dim x dim");
    try {
      return ClassicalNorm::inner_product(std::move(a));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  fail("classicalNorm.kind '" + k + "' is unknown (expected l1, l2, linf or innerProduct)");
}

FuzzyNorm parse_fuzzy(const ojson* j, const ClassicalNorm& base, const std::string& where) {
  if (!j) return FuzzyNorm::nk(base, 1.0);
  if (!j->is_object()) fail(where + " must be an object");
  const ojson* kind = find(*j, "kind");
  if (!kind) fail(where + ".kind is missing");
  const std::string k = as_string(*kind, where + ".kind");
  if (k == "crisp") return FuzzyNorm::crisp(base);
  if (k == "nk") {
    double kv = 1.0;
    if (const ojson* kj = find(*j, "k")) kv = as_number(*kj, where + ".k");
    if (!(kv > 0.0) || !std::isfinite(kv)) fail(where + ".k must be positive and finite");
    return FuzzyNorm::nk(base, kv);
  }
  fail(where + ".kind '" + k + "' is unknown (expected nk or crisp)");
}

FunctionSpec parse_function(const ojson& j, int dim, const std::string& where) {
  if (!j.is_object()) fail(where + " must be an object");
  const ojson* kindJ = find(j, "kind");
  if (!kindJ) fail(where + ".kind is missing");
  const std::string kind = as_string(*kindJ, where + ".kind");

  auto vec = [&](const char* key) -> Vec {
    const ojson* v = find(j, key);
    if (!v) fail(where + "." + key + " is missing");
    return as_vec(*v, where + "." + key);
  };
  auto mat = [&](const char* key) -> Mat {
    const ojson* v = find(j, key);
    if (!v) fail(where + "." + key + " is missing");
    return as_mat(*v, where + "." + key);
  };
  auto num = [&](const char* key) -> double {
    const ojson* v = find(j, key);
    if (!v) fail(where + "." + key + " is missing");
    return as_number(*v, where + "." + key);
  };

  try {
    std::optional<FunctionSpec> spec;
    if (kind == "quadraticForm") {
      spec.emplace(QuadraticForm{mat("matrix"), vec("direction")});
    } else if (kind == "perturbedQuadratic") {
      PerturbedQuadratic p{mat("matrix"), vec("direction"), num("c"), num("r"), Vec()};
      if (find(j, "direction2")) p.direction2 = vec("direction2");
      spec.emplace(std::move(p));
    } else if (kind == "quadraticPlusLinear") {
      spec.emplace(QuadraticPlusLinear{mat("matrix"), vec("direction"), mat("linear")});
    } else if (kind == "algebraExample") {
      spec.emplace(AlgebraExample{vec("x0")});
    } else if (kind == "innerProductExample") {
      spec.emplace(InnerProductExample{vec("a"), vec("x0"), vec("y0"), vec("z0")});
    } else if (kind == "linearMap") {
      spec.emplace(LinearMap{mat("matrix")});
    } else {
      fail(where + ".kind '" + kind + "' is unknown");
    }
    if (spec->domain_dim() != dim) {
      fail(where + ": domain dimension " + std::to_string(spec->domain_dim()) +
           " does not match dim = " + std::to_string(dim));
    }
    return *spec;
  } catch (const std::invalid_argument& e) {
    fail(where + ": " + e.what());
  }
}

ControlFunction parse_control(const ojson& j, const std::string& where) {
  if (!j.is_object()) fail(where + " must be an object");
  const ojson* kindJ = find(j, "kind");
  if (!kindJ) fail(where + ".kind is missing");
  const std::string kind = as_string(*kindJ, where + ".kind");
  double scale = 1.0;
  if (const ojson* s = find(j, "scale")) scale = as_number(*s, where + ".scale");
  try {
    if (kind == "example34Phi") {
      double z0 = 1.0;
      if (const ojson* z = find(j, "z0Norm")) z0 = as_number(*z, where + ".z0Norm");
      return ControlFunction(Example34Phi{z0}, scale);
    }
    if (kind == "powerSum") {
      const ojson* p = find(j, "p");
      if (!p) fail(where + ".p is missing");
      return ControlFunction(PowerSum{as_number(*p, where + ".p")}, scale);
    }
  } catch (const std::invalid_argument& e) {
    fail(where + ": " + e.what());
  }
  fail(where + ".kind '" + kind + "' is unknown (expected example34Phi or powerSum)");
}

IterationKind parse_iteration(const std::string& s) {
  if (s == "directQuadratic") return IterationKind::DirectQuadratic;
  if (s == "directAdditive") return IterationKind::DirectAdditive;
  if (s == "dualQuadratic") return IterationKind::DualQuadratic;
  if (s == "dualAdditive") return IterationKind::DualAdditive;
  fail("iteration '" + s + "' is unknown");
}

const std::set<std::string>& known_checks() {
  static const std::set<std::string> k = {
      "axioms",   "q_almost", "control_bounded", "alpha",    "theorem1",
      "remark22", "prop1",    "prop2",           "theorem3", "classical",
      "hyers",    "dual_decay", "direct_divergence"};
  return k;
}

const std::set<std::string>& known_fields() {
  static const std::set<std::string> k = {
      "name",        "dim",        "seed",       "sampleCount", "sampleRadius",
      "traceCount",  "tol",        "eps",        "maxN",        "offDiagonalPairs",
      "iteration",   "checks",     "tGrid",      "classicalNorm", "fuzzyNormX",
      "fuzzyNormY",  "fuzzyNormZ", "function",   "pexider",     "control",
      "q",           "classicalP", "classicalC", "description"};
  return k;
}

bool has_check(const ScenarioConfig& cfg, const char* id) {
  return std::find(cfg.checks.begin(), cfg.checks.end(), id) != cfg.checks.end();
}

void validate_checks(ScenarioConfig& cfg) {
  if (cfg.checks.empty()) fail("checks must be a nonempty array");
  for (const std::string& c : cfg.checks) {
    if (!known_checks().count(c)) {
      std::string all;
      for (const auto& k : known_checks()) all += (all.empty() ? "" : ", ") + k;
      fail("unknown check '" + c + "' (known: " + all + ")");
    }
  }
  // The theorem1 check already reports the sharper remark22 variant.
  if (has_check(cfg, "theorem1")) {
    cfg.checks.erase(std::remove(cfg.checks.begin(), cfg.checks.end(), "remark22"),
                     cfg.checks.end());
  }

  auto needFunction = [&](const char* check) {
    if (!cfg.function) fail(std::string("check '") + check + "' requires a function");
  };
  auto needControl = [&](const char* check) {
    if (!cfg.control) fail(std::string("check '") + check + "' requires a control function");
  };
  auto alphaIn = [&](const char* check, double upper) {
    const double a = std::abs(cfg.control->alpha());
    if (!(a > 0.0) || !(a < upper)) {
      std::ostringstream os;
      os << "check '" << check << "' requires 0 < |alpha| < " << upper << " (alpha = " << a
         << ")";
      fail(os.str());
    }
  };

  for (const std::string& c : cfg.checks) {
    if (c == "q_almost" || c == "theorem1" || c == "remark22") {
      needFunction(c.c_str());
      if (!cfg.q) fail("check '" + c + "' requires q");
      if (c == "q_almost") {
        if (!(*cfg.q > 0.0) || *cfg.q == 0.5) {
          fail("check 'q_almost' requires q > 0 and q != 1/2 (the criterion degenerates at 1/2)");
        }
      } else if (!(*cfg.q > 0.5)) {
        fail("check '" + c + "' requires q > 1/2 (q = " + std::to_string(*cfg.q) +
             " is outside the validity domain)");
      }
    } else if (c == "alpha") {
      needControl("alpha");
    } else if (c == "control_bounded") {
      needControl("control_bounded");
      if (!cfg.pexider && !cfg.function) fail("check 'control_bounded' requires a pexider triple or a function");
    } else if (c == "prop1" || c == "prop2") {
      needControl(c.c_str());
      if (!cfg.pexider && !cfg.function) fail("check '" + c + "' requires a pexider triple or a function");
      alphaIn(c.c_str(), c == "prop1" ? 2.0 : 4.0);
    } else if (c == "theorem3") {
      needFunction("theorem3");
      needControl("theorem3");
      alphaIn("theorem3", 2.0);
    } else if (c == "classical") {
      needFunction("classical");
      if (!cfg.classicalP) fail("check 'classical' requires classicalP");
    } else if (c == "hyers" || c == "dual_decay" || c == "direct_divergence") {
      needFunction(c.c_str());
      if (c != "hyers" && !std::holds_alternative<PerturbedQuadratic>(cfg.function->variant())) {
        fail("check '" + c +
             "' requires a perturbedQuadratic function (the predicted error ratio depends on "
             "the perturbation exponent)");
      }
    }
  }

  // Pexider checks fall back to the degenerate triple (f, f, f).
  const bool wantsTriple =
      has_check(cfg, "control_bounded") || has_check(cfg, "prop1") || has_check(cfg, "prop2");
  if (wantsTriple && !cfg.pexider) {
    cfg.pexider.emplace(*cfg.function, *cfg.function, *cfg.function);
  }
}

}  // namespace

ScenarioConfig load_scenario(const ojson& j) {
  if (!j.is_object()) fail("top level must be a JSON object");
  for (const auto& item : j.items()) {
    if (!known_fields().count(item.key())) fail("unknown field '" + item.key() + "'");
  }

  ScenarioConfig cfg;
  cfg.raw = j;
  if (const ojson* v = find(j, "name")) cfg.name = as_string(*v, "name");
  if (cfg.name.empty()) cfg.name = "scenario";

  if (const ojson* v = find(j, "dim")) {
    cfg.dim = as_int(*v, "dim");
    if (cfg.dim < 1 || cfg.dim > 1024) fail("dim must lie in [1, 1024]");
  }

  const ojson* seed = find(j, "seed");
  if (!seed) fail("seed is mandatory (sampling must be reproducible)");
  if (!seed->is_number_unsigned() && !(seed->is_number_integer() && seed->get<long long>() >= 0)) {
    fail("seed must be a nonnegative integer");
  }
  cfg.seed = seed->get<std::uint64_t>();

  if (const ojson* v = find(j, "sampleCount")) {
    cfg.sampleCount = as_int(*v, "sampleCount");
    if (cfg.sampleCount < 1 || cfg.sampleCount > 1000000) fail("sampleCount must lie in [1, 1e6]");
  }
  if (const ojson* v = find(j, "sampleRadius")) {
    cfg.sampleRadius = as_number(*v, "sampleRadius");
    if (!(cfg.sampleRadius > 0.0) || !std::isfinite(cfg.sampleRadius)) {
      fail("sampleRadius must be positive and finite");
    }
  }
  if (const ojson* v = find(j, "traceCount")) {
    cfg.traceCount = as_int(*v, "traceCount");
    if (cfg.traceCount < 0) fail("traceCount must be nonnegative");
  }
  if (const ojson* v = find(j, "tol")) {
    cfg.tol = as_number(*v, "tol");
    if (!(cfg.tol > 0.0) || cfg.tol >= 1.0) fail("tol must lie in (0, 1)");
  }
  if (const ojson* v = find(j, "eps")) {
    cfg.eps = as_number(*v, "eps");
    if (!(cfg.eps > 0.0) || cfg.eps >= 1.0) fail("eps must lie in (0, 1)");
  }
  if (const ojson* v = find(j, "maxN")) {
    cfg.maxN = as_int(*v, "maxN");
    if (cfg.maxN < 1 || cfg.maxN > 400) fail("maxN must lie in [1, 400]");
  }
  if (const ojson* v = find(j, "offDiagonalPairs")) {
    cfg.offDiagonalPairs = as_int(*v, "offDiagonalPairs");
    if (cfg.offDiagonalPairs < 0) fail("offDiagonalPairs must be nonnegative");
  }
  if (const ojson* v = find(j, "iteration")) {
    cfg.iteration = parse_iteration(as_string(*v, "iteration"));
  }

  if (const ojson* v = find(j, "tGrid")) {
    if (!v->is_object()) fail("tGrid must be an object {tMin, tMax, count}");
    double tMin = 1e-3, tMax = 1e6;
    int count = 64;
    if (const ojson* w = find(*v, "tMin")) tMin = as_number(*w, "tGrid.tMin");
    if (const ojson* w = find(*v, "tMax")) tMax = as_number(*w, "tGrid.tMax");
    if (const ojson* w = find(*v, "count")) count = as_int(*w, "tGrid.count");
    try {
      cfg.grid = TGrid::logarithmic(tMin, tMax, count);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  if (const ojson* v = find(j, "classicalNorm")) cfg.classical = parse_classical(*v, cfg.dim);
  cfg.fuzzyX = parse_fuzzy(find(j, "fuzzyNormX"), cfg.classical, "fuzzyNormX");
  cfg.fuzzyY = parse_fuzzy(find(j, "fuzzyNormY"), cfg.classical, "fuzzyNormY");
  cfg.fuzzyZ = parse_fuzzy(find(j, "fuzzyNormZ"), cfg.classical, "fuzzyNormZ");

  if (const ojson* v = find(j, "function")) cfg.function = parse_function(*v, cfg.dim, "function");
  if (const ojson* v = find(j, "pexider")) {
    if (!v->is_object()) fail("pexider must be an object {f, g, h}");
    const ojson* fj = find(*v, "f");
    const ojson* gj = find(*v, "g");
    const ojson* hj = find(*v, "h");
    if (!fj || !gj || !hj) fail("pexider requires f, g and h");
    try {
      cfg.pexider.emplace(parse_function(*fj, cfg.dim, "pexider.f"),
                          parse_function(*gj, cfg.dim, "pexider.g"),
                          parse_function(*hj, cfg.dim, "pexider.h"));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  if (const ojson* v = find(j, "control")) cfg.control = parse_control(*v, "control");
  if (const ojson* v = find(j, "q")) cfg.q = as_number(*v, "q");
  if (const ojson* v = find(j, "classicalP")) {
    cfg.classicalP = as_number(*v, "classicalP");
    if (!(*cfg.classicalP >= 0.0) || !std::isfinite(*cfg.classicalP)) {
      fail("classicalP must be finite and nonnegative");
    }
  }
  if (const ojson* v = find(j, "classicalC")) {
    if (v->is_string()) {
      if (v->get<std::string>() != "preset") fail("classicalC must be a number or \"preset\"");
    } else {
      cfg.classicalC = as_number(*v, "classicalC");
    }
  }
  // Resolve the preset once p is known; a nonpositive preset is a config
  // error, not a silent sign flip.
  if (const ojson* v = find(j, "checks")) {
    if (!v->is_array()) fail("checks must be an array of check ids");
    for (const auto& c : *v) cfg.checks.push_back(as_string(c, "checks entry"));
  }
  if (has_check(cfg, "classical") && !cfg.classicalC) {
    if (!cfg.classicalP) fail("check 'classical' requires classicalP");
    bool valid = false;
    const double preset = classical_preset_constant(*cfg.classicalP, &valid);
    if (!valid || !(preset > 0.0) || !std::isfinite(preset)) {
      std::ostringstream os;
      os << "classical preset constant 4/(2^(2-p)-1) is nonpositive or infinite at p = "
         << *cfg.classicalP << "; supply a positive classicalC or use p < 2";
      fail(os.str());
    }
    cfg.classicalC = preset;
  }
  if (cfg.classicalC && !(*cfg.classicalC > 0.0)) fail("classicalC must be positive");

  validate_checks(cfg);
  return cfg;
}

ScenarioConfig load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  ojson j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return load_scenario(j);
}

namespace {

struct CheckOutput {
  std::vector<StabilityReport> reports;
  std::vector<LabeledAxiomReport> axioms;
  std::optional<AlphaEstimate> alpha;
  std::vector<std::pair<int, HyersTrace>> traces;
};

struct ScenarioData {
  std::vector<Vec> xs;
  std::vector<std::pair<Vec, Vec>> pairs;
  std::vector<std::vector<std::pair<double, double>>> stPairs;
};

constexpr double kAlphaTolerance = 1e-10;

CheckOutput run_axioms_check(const ScenarioConfig& cfg, const ScenarioData& data) {
  CheckOutput out;
  const std::vector<double> scalars = {0.0, 0.5, -1.0, 2.0, -2.5, 8.0};
  const std::array<std::pair<const char*, const FuzzyNorm*>, 3> norms = {
      std::make_pair("X", &*cfg.fuzzyX), std::make_pair("Y", &*cfg.fuzzyY),
      std::make_pair("Z", &*cfg.fuzzyZ)};
  AxiomOptions opt;
  opt.pairSeed = cfg.seed ^ 0x517cc1b727220a95ull;
  for (const auto& [label, fn] : norms) {
    AxiomReport rep = check_axioms(candidate(*fn, label), data.xs, cfg.grid, scalars, opt);
    StabilityReport sr;
    sr.inequalityId = std::string("axioms.") + label;
    const AxiomCheck* parts[] = {&rep.range,       &rep.vanishing, &rep.identity,
                                 &rep.homogeneity, &rep.additivity, &rep.monotone};
    for (int i = 0; i < 6; ++i) sr.add(i, 0.0, parts[i]->worstMargin, 0.0);
    out.reports.push_back(std::move(sr));
    out.axioms.push_back({label, std::move(rep)});
  }
  return out;
}

CheckOutput run_alpha_check(const ScenarioConfig& cfg, const ScenarioData& data) {
  CheckOutput out;
  const AlphaEstimate est = estimate_alpha(*cfg.control, data.pairs);
  StabilityReport sr;
  sr.inequalityId = "alpha";
  sr.add(-1, 0.0, kAlphaTolerance, std::abs(est.alpha - cfg.control->alpha()));
  sr.add(0, 0.0, kAlphaTolerance, est.maxResidual);
  out.reports.push_back(std::move(sr));
  out.alpha = est;
  return out;
}

double mean_error_ratio(const std::vector<double>& errs, int maxRatios = 8) {
  double sum = 0.0;
  int count = 0;
  for (std::size_t n = 1; n < errs.size() && count < maxRatios; ++n) {
    if (errs[n - 1] > 0.0) {
      sum += errs[n] / errs[n - 1];
      ++count;
    }
  }
  return count > 0 ? sum / count : std::numeric_limits<double>::quiet_NaN();
}

CheckOutput run_hyers_check(const ScenarioConfig& cfg, const ScenarioData& data) {
  CheckOutput out;
  const EvaluatedFunction fe = evaluated(*cfg.function);
  StabilityReport sr;
  sr.inequalityId = "hyers";
  for (std::size_t i = 0; i < data.xs.size(); ++i) {
    HyersTrace tr =
        run_trace(fe, data.xs[i], cfg.iteration, *cfg.fuzzyY, cfg.grid, cfg.hyers_options());
    sr.add(static_cast<int>(i), 0.0, tr.converged ? 1.0 : 0.0, 1.0);
    if (!tr.converged) ++sr.convergenceFailures;
    if (static_cast<int>(i) < cfg.traceCount) out.traces.emplace_back(static_cast<int>(i), std::move(tr));
  }
  out.reports.push_back(std::move(sr));
  return out;
}

CheckOutput run_decay_check(const ScenarioConfig& cfg, const ScenarioData& data, bool dual) {
  CheckOutput out;
  const auto& pq = std::get<PerturbedQuadratic>(cfg.function->variant());
  const double predicted = dual ? std::exp2(2.0 - pq.r) : std::exp2(pq.r - 2.0);
  const IterationKind kind = dual ? IterationKind::DualQuadratic : IterationKind::DirectQuadratic;
  const char* prefix = dual ? "dual_decay" : "direct_divergence";

  const EvaluatedFunction fe = evaluated(*cfg.function);
  StabilityReport ratio, flag;
  ratio.inequalityId = std::string(prefix) + ".ratio";
  flag.inequalityId = std::string(prefix) + (dual ? ".converged" : ".flagged");
  for (std::size_t i = 0; i < data.xs.size(); ++i) {
    HyersTrace tr = run_trace(fe, data.xs[i], kind, *cfg.fuzzyY, cfg.grid, cfg.hyers_options());
    const double measured = mean_error_ratio(tr.successiveErrors);
    const double dev = std::isfinite(measured) ? std::abs(measured - predicted)
                                               : std::numeric_limits<double>::infinity();
    ratio.add(static_cast<int>(i), 0.0, 0.05 * predicted, dev);
    if (dual) {
      flag.add(static_cast<int>(i), 0.0, tr.converged ? 1.0 : 0.0, 1.0);
      if (!tr.converged) ++flag.convergenceFailures;
    } else {
      // Divergence is the expected outcome here, so a non-converged trace is
      // the passing case and is not a convergence failure.
      flag.add(static_cast<int>(i), 0.0, tr.converged ? 0.0 : 1.0, 1.0);
    }
    if (static_cast<int>(i) < cfg.traceCount) out.traces.emplace_back(static_cast<int>(i), std::move(tr));
  }
  out.reports.push_back(std::move(ratio));
  out.reports.push_back(std::move(flag));
  return out;
}

CheckOutput run_check(const std::string& id, const ScenarioConfig& cfg, const ScenarioData& data) {
  CheckOutput out;
  const VerifyOptions vopt{cfg.hyers_options(), kMembershipSlack};
  if (id == "axioms") return run_axioms_check(cfg, data);
  if (id == "alpha") return run_alpha_check(cfg, data);
  if (id == "hyers") return run_hyers_check(cfg, data);
  if (id == "dual_decay") return run_decay_check(cfg, data, true);
  if (id == "direct_divergence") return run_decay_check(cfg, data, false);
  if (id == "q_almost") {
    out.reports.push_back(check_q_almost(*cfg.function, *cfg.fuzzyX, *cfg.fuzzyY, *cfg.q,
                                         data.pairs, data.stPairs));
    return out;
  }
  if (id == "control_bounded") {
    out.reports.push_back(check_control_bounded(*cfg.pexider, *cfg.control, *cfg.fuzzyY,
                                                *cfg.fuzzyZ, data.pairs, cfg.grid));
    return out;
  }
  if (id == "theorem1" || id == "remark22") {
    auto reports =
        verify_theorem1(*cfg.function, *cfg.fuzzyX, *cfg.fuzzyY, *cfg.q, data.xs, cfg.grid, vopt);
    if (id == "remark22") {
      out.reports.push_back(std::move(reports[1]));
    } else {
      for (auto& r : reports) out.reports.push_back(std::move(r));
    }
    return out;
  }
  if (id == "prop1") {
    out.reports = verify_prop1(*cfg.pexider, *cfg.control, *cfg.fuzzyY, *cfg.fuzzyZ, data.xs,
                               cfg.grid, vopt);
    return out;
  }
  if (id == "prop2") {
    out.reports = verify_prop2(*cfg.pexider, *cfg.control, *cfg.fuzzyY, *cfg.fuzzyZ, data.xs,
                               cfg.grid, vopt);
    return out;
  }
  if (id == "theorem3") {
    out.reports = verify_theorem3(*cfg.function, *cfg.control, *cfg.fuzzyY, *cfg.fuzzyZ, data.xs,
                                  cfg.grid, vopt);
    return out;
  }
  if (id == "classical") {
    out.reports = verify_classical(*cfg.function, *cfg.classicalP, *cfg.classicalC, cfg.classical,
                                   cfg.classical, data.pairs, data.xs, vopt);
    return out;
  }
  throw ConfigError("scenario config: unknown check '" + id + "'");
}

}  // namespace

int RunResult::exit_status() const {
  int conv = 0;
  int fails = 0;
  for (const auto& r : reports) {
    conv += r.convergenceFailures;
    fails += r.failCount;
  }
  if (conv > 0) return kExitConvergenceFailure;
  if (fails > 0) return kExitInequalityFailure;
  return kExitOk;
}

RunResult run_scenario(const ScenarioConfig& cfg, int jobs) {
  if (jobs < 1) throw ConfigError("scenario config: jobs must be >= 1");
  if (!cfg.fuzzyX || !cfg.fuzzyY || !cfg.fuzzyZ) {
    throw ConfigError("scenario config: fuzzy norms are not resolved (use load_scenario)");
  }

  RunResult res;
  res.scenario = cfg.name;
  res.seed = cfg.seed;

  // All random inputs are drawn up front in a fixed order, so the set of
  // checks never shifts the samples and concurrent checks stay deterministic.
  ScenarioData data;
  SplitMix64 rng(cfg.seed);
  data.xs = sample_ball_many(rng, cfg.dim, cfg.sampleRadius, cfg.sampleCount);
  const std::vector<Vec> ys = sample_ball_many(rng, cfg.dim, cfg.sampleRadius, cfg.sampleCount);
  data.pairs.reserve(data.xs.size());
  for (std::size_t i = 0; i < data.xs.size(); ++i) data.pairs.emplace_back(data.xs[i], ys[i]);
  data.stPairs = make_st_pairs(cfg.grid, data.xs.size(), cfg.offDiagonalPairs, rng.next());

  std::vector<CheckOutput> outs(cfg.checks.size());
  auto runOne = [&](std::size_t idx) { outs[idx] = run_check(cfg.checks[idx], cfg, data); };
  if (jobs > 1 && cfg.checks.size() > 1) {
    std::vector<std::future<void>> futures;
    futures.reserve(cfg.checks.size());
    for (std::size_t i = 0; i < cfg.checks.size(); ++i) {
      futures.push_back(std::async(std::launch::async, runOne, i));
    }
    for (auto& f : futures) f.get();
  } else {
    for (std::size_t i = 0; i < cfg.checks.size(); ++i) runOne(i);
  }

  bool tracesTaken = false;
  for (auto& o : outs) {
    for (auto& r : o.reports) {
      r.scenario = cfg.name;
      res.reports.push_back(std::move(r));
    }
    for (auto& a : o.axioms) res.axioms.push_back(std::move(a));
    if (o.alpha && !res.alpha) res.alpha = o.alpha;
    if (!tracesTaken && !o.traces.empty()) {
      res.traces = std::move(o.traces);
      tracesTaken = true;
    }
  }
  return res;
}

namespace {

ojson example34_function(bool oddPartOnly) {
  // f = <x, a> x0 + |x|^2 y0 + sqrt|x| z0 on R^3; the odd-only variant keeps
  // just the linear term (used as the Pexider h when a = 0).
  ojson f = {{"kind", "innerProductExample"},
             {"a", {1.0, 0.25, -0.5}},
             {"x0", {1.0, 0.0, 0.0}},
             {"y0", {0.0, 1.0, 0.0}},
             {"z0", {0.0, 0.0, 1.0}}};
  if (oddPartOnly) f["a"] = {0.0, 0.0, 0.0};
  return f;
}

ojson example34_pexider() {
  // g keeps the linear and quadratic terms, h the quadratic and sqrt terms;
  // the Pexider defect then collapses to phi(x, y) z0.
  ojson g = example34_function(false);
  g["z0"] = {0.0, 0.0, 0.0};
  return {{"f", example34_function(false)}, {"g", g}, {"h", example34_function(true)}};
}

std::vector<std::pair<BuiltinInfo, ojson>> make_builtin_table() {
  std::vector<std::pair<BuiltinInfo, ojson>> table;

  table.push_back(
      {{"axiom-suite", "axiom battery for the catalog norms over a 3-d space"},
       {{"name", "axiom-suite"},
        {"dim", 3},
        {"seed", 90210441},
        {"sampleCount", 80},
        {"sampleRadius", 5.0},
        {"classicalNorm", {{"kind", "l2"}}},
        {"fuzzyNormX", {{"kind", "nk"}, {"k", 1.0}}},
        {"fuzzyNormY", {{"kind", "nk"}, {"k", 2.0}}},
        {"fuzzyNormZ", {{"kind", "crisp"}}},
        {"checks", {"axioms"}}}});

  table.push_back(
      {{"theorem1-algebra",
        "direct quadratic stability for the scalar algebra example, with the sharper variant"},
       {{"name", "theorem1-algebra"},
        {"dim", 1},
        {"seed", 60445219},
        {"sampleCount", 32},
        {"sampleRadius", 10.0},
        {"fuzzyNormX", {{"kind", "nk"}, {"k", 1.0}}},
        {"fuzzyNormY", {{"kind", "nk"}, {"k", 2.0}}},
        {"function", {{"kind", "algebraExample"}, {"x0", {1.0}}}},
        {"q", 1.0},
        {"iteration", "directQuadratic"},
        {"checks", {"hyers", "theorem1"}}}});

  table.push_back(
      {{"remark22-variant", "sharper direct bound alone on the scalar algebra example"},
       {{"name", "remark22-variant"},
        {"dim", 1},
        {"seed", 77120021},
        {"sampleCount", 32},
        {"sampleRadius", 10.0},
        {"fuzzyNormX", {{"kind", "nk"}, {"k", 1.0}}},
        {"fuzzyNormY", {{"kind", "nk"}, {"k", 2.0}}},
        {"function", {{"kind", "algebraExample"}, {"x0", {1.0}}}},
        {"q", 1.0},
        {"checks", {"remark22"}}}});

  table.push_back(
      {{"qalmost-algebra",
        "pair criterion for the scalar algebra example under the norm roles that satisfy it"},
       {{"name", "qalmost-algebra"},
        {"dim", 1},
        {"seed", 31415213},
        {"sampleCount", 24},
        {"sampleRadius", 10.0},
        {"fuzzyNormX", {{"kind", "nk"}, {"k", 2.0}}},
        {"fuzzyNormY", {{"kind", "nk"}, {"k", 1.0}}},
        {"function", {{"kind", "algebraExample"}, {"x0", {1.0}}}},
        {"q", 1.0},
        {"checks", {"q_almost"}}}});

  table.push_back(
      {{"classical-corollary", "crisp-magnitude defect and stability bounds at p = 1"},
       {{"name", "classical-corollary"},
        {"dim", 1},
        {"seed", 55501237},
        {"sampleCount", 32},
        {"sampleRadius", 10.0},
        {"fuzzyNormX", {{"kind", "crisp"}}},
        {"fuzzyNormY", {{"kind", "crisp"}}},
        {"function",
         {{"kind", "perturbedQuadratic"},
          {"matrix", {{1.0}}},
          {"direction", {1.0}},
          {"c", 1.0},
          {"r", 1.0}}},
        {"classicalP", 1.0},
        {"classicalC", "preset"},
        {"checks", {"classical"}}}});

  table.push_back(
      {{"dual-remark25", "dual iteration decays at the predicted ratio where the direct one diverges"},
       {{"name", "dual-remark25"},
        {"dim", 1},
        {"seed", 42424243},
        {"sampleCount", 16},
        {"sampleRadius", 2.0},
        {"traceCount", 2},
        {"function",
         {{"kind", "perturbedQuadratic"},
          {"matrix", {{1.0}}},
          {"direction", {1.0}},
          {"c", 1.0},
          {"r", 3.0}}},
        {"iteration", "dualQuadratic"},
        {"checks", {"dual_decay", "direct_divergence"}}}});

  table.push_back(
      {{"prop1-odd", "odd-part Pexider bounds for the inner-product example"},
       {{"name", "prop1-odd"},
        {"dim", 3},
        {"seed", 82910117},
        {"sampleCount", 16},
        {"sampleRadius", 2.0},
        {"pexider", example34_pexider()},
        {"control", {{"kind", "example34Phi"}, {"z0Norm", 1.0}}},
        {"checks", {"prop1"}}}});

  table.push_back(
      {{"prop2-even", "even-part Pexider bounds for the inner-product example"},
       {{"name", "prop2-even"},
        {"dim", 3},
        {"seed", 64512347},
        {"sampleCount", 16},
        {"sampleRadius", 2.0},
        {"pexider", example34_pexider()},
        {"control", {{"kind", "example34Phi"}, {"z0Norm", 1.0}}},
        {"checks", {"prop2"}}}});

  table.push_back(
      {{"theorem3-combined", "combined additive+quadratic split bound for the inner-product example"},
       {{"name", "theorem3-combined"},
        {"dim", 3},
        {"seed", 19216811},
        {"sampleCount", 16},
        {"sampleRadius", 2.0},
        {"function", example34_function(false)},
        {"control", {{"kind", "example34Phi"}, {"z0Norm", 1.0}}},
        {"checks", {"theorem3"}}}});

  table.push_back(
      {{"example34-innerproduct", "full tour of the inner-product example: alpha, control bound, "
                                  "odd, even and combined"},
       {{"name", "example34-innerproduct"},
        {"dim", 3},
        {"seed", 70077001},
        {"sampleCount", 24},
        {"sampleRadius", 2.0},
        {"tGrid", {{"tMin", 0.1}, {"tMax", 1e6}, {"count", 64}}},
        {"function", example34_function(false)},
        {"pexider", example34_pexider()},
        {"control", {{"kind", "example34Phi"}, {"z0Norm", 1.0}}},
        {"checks", {"alpha", "control_bounded", "prop1", "prop2", "theorem3"}}}});

  return table;
}

const std::vector<std::pair<BuiltinInfo, ojson>>& builtin_table() {
  static const auto table = make_builtin_table();
  return table;
}

}  // namespace

const std::vector<BuiltinInfo>& list_builtins() {
  static const std::vector<BuiltinInfo> infos = [] {
    std::vector<BuiltinInfo> v;
    for (const auto& [info, _] : builtin_table()) v.push_back(info);
    return v;
  }();
  return infos;
}

bool is_builtin(const std::string& name) {
  for (const auto& [info, _] : builtin_table()) {
    if (info.name == name) return true;
  }
  return false;
}

nlohmann::ordered_json builtin_config(const std::string& name) {
  for (const auto& [info, cfg] : builtin_table()) {
    if (info.name == name) return cfg;
  }
  throw ConfigError("unknown builtin scenario '" + name + "' (see `list`)");
}

}  // namespace fuzzystab
