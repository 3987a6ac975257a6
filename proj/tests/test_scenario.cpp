#include <doctest.h>

#include "fuzzystab/report_io.hpp"
#include "fuzzystab/scenario.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace fuzzystab;
using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

const ojson kAlgebra = {{"kind", "algebraExample"}, {"x0", {1.0}}};

ojson determinism_config() {
  return {{"name", "mini"},
          {"dim", 1},
          {"seed", 123456},
          {"sampleCount", 6},
          {"traceCount", 2},
          {"tGrid", {{"tMin", 1e-3}, {"tMax", 1e6}, {"count", 16}}},
          {"fuzzyNormX", {{"kind", "nk"}, {"k", 1.0}}},
          {"fuzzyNormY", {{"kind", "nk"}, {"k", 2.0}}},
          {"function", kAlgebra},
          {"q", 1.0},
          {"checks", {"hyers", "theorem1"}}};
}

std::string load_error(const ojson& j) {
  try {
    (void)load_scenario(j);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path fresh_dir(const char* leaf) {
  const fs::path dir = fs::temp_directory_path() / "fuzzystab-tests" / leaf;
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("minimal config resolves documented defaults") {
  const ScenarioConfig cfg = load_scenario({{"seed", 7}, {"checks", {"axioms"}}});
  CHECK(cfg.name == "scenario");
  CHECK(cfg.dim == 1);
  CHECK(cfg.seed == 7);
  CHECK(cfg.sampleCount == 32);
  CHECK(cfg.sampleRadius == 10.0);
  CHECK(cfg.traceCount == 3);
  CHECK(cfg.tol == 1e-9);
  CHECK(cfg.eps == 1e-6);
  CHECK(cfg.maxN == 60);
  CHECK(cfg.offDiagonalPairs == 32);
  CHECK(cfg.iteration == IterationKind::DirectQuadratic);
  CHECK(cfg.grid.count() == 64);
  CHECK(cfg.grid.tMin() == 1e-3);
  CHECK(cfg.grid.tMax() == 1e6);
  REQUIRE(cfg.fuzzyX);
  REQUIRE(cfg.fuzzyY);
  REQUIRE(cfg.fuzzyZ);
  // Unset fuzzy norms default to the ratio norm with k = 1 over l2.
  Vec x(1);
  x << 3.0;
  CHECK(cfg.fuzzyX->eval(x, 1.0) == 0.25);
  CHECK(cfg.fuzzyZ->eval(x, 1.0) == 0.25);
}

TEST_CASE("malformed configs are rejected with a pointed message") {
  const std::vector<std::pair<ojson, std::string>> cases = {
      {ojson::array({1, 2}), "top level must be a JSON object"},
      {{{"seed", 1}, {"checks", {"axioms"}}, {"bogus", 3}}, "unknown field 'bogus'"},
      {{{"checks", {"axioms"}}}, "seed is mandatory"},
      {{{"seed", -4}, {"checks", {"axioms"}}}, "seed must be a nonnegative integer"},
      {{{"seed", 1}, {"dim", 0}, {"checks", {"axioms"}}}, "dim must lie in [1, 1024]"},
      {{{"seed", 1}, {"tol", 1.0}, {"checks", {"axioms"}}}, "tol must lie in (0, 1)"},
      {{{"seed", 1}, {"eps", 0.0}, {"checks", {"axioms"}}}, "eps must lie in (0, 1)"},
      {{{"seed", 1}, {"maxN", 0}, {"checks", {"axioms"}}}, "maxN must lie in [1, 400]"},
      {{{"seed", 1}, {"sampleCount", 0}, {"checks", {"axioms"}}}, "sampleCount must lie in"},
      {{{"seed", 1}, {"sampleRadius", -1.0}, {"checks", {"axioms"}}},
       "sampleRadius must be positive"},
      {{{"seed", 1}, {"offDiagonalPairs", -1}, {"checks", {"axioms"}}},
       "offDiagonalPairs must be nonnegative"},
      {{{"seed", 1}, {"checks", ojson::array()}}, "checks must be a nonempty array"},
      {{{"seed", 1}, {"checks", {"nope"}}}, "unknown check 'nope'"},
      {{{"seed", 1}, {"iteration", "zigzag"}, {"checks", {"axioms"}}},
       "iteration 'zigzag' is unknown"},
      {{{"seed", 1}, {"tGrid", {{"count", 1}}}, {"checks", {"axioms"}}},
       "count must be at least 2"},
      {{{"seed", 1}, {"tGrid", {{"tMin", 0.0}}}, {"checks", {"axioms"}}},
       "tMin must be positive"},
      {{{"seed", 1}, {"classicalNorm", {{"kind", "l7"}}}, {"checks", {"axioms"}}},
       "expected l1, l2, linf or innerProduct"},
      {{{"seed", 1}, {"fuzzyNormX", {{"kind", "triangular"}}}, {"checks", {"axioms"}}},
       "expected nk or crisp"},
      {{{"seed", 1}, {"fuzzyNormX", {{"kind", "nk"}, {"k", 0.0}}}, {"checks", {"axioms"}}},
       "fuzzyNormX.k must be positive"},
      {{{"seed", 1}, {"q", 1.0}, {"checks", {"theorem1"}}}, "requires a function"},
      {{{"seed", 1}, {"function", kAlgebra}, {"checks", {"theorem1"}}},
       "check 'theorem1' requires q"},
      {{{"seed", 1}, {"function", kAlgebra}, {"q", 0.4}, {"checks", {"theorem1"}}},
       "requires q > 1/2"},
      {{{"seed", 1}, {"function", kAlgebra}, {"q", 0.5}, {"checks", {"q_almost"}}},
       "degenerates at 1/2"},
      {{{"seed", 1}, {"function", kAlgebra}, {"q", 0.0}, {"checks", {"q_almost"}}},
       "requires q > 0"},
      {{{"seed", 1}, {"checks", {"alpha"}}}, "requires a control function"},
      {{{"seed", 1},
        {"function", kAlgebra},
        {"control", {{"kind", "powerSum"}, {"p", 1.5}}},
        {"checks", {"prop1"}}},
       "requires 0 < |alpha| < 2"},
      {{{"seed", 1},
        {"function", kAlgebra},
        {"control", {{"kind", "powerSum"}, {"p", 2.1}}},
        {"checks", {"prop2"}}},
       "requires 0 < |alpha| < 4"},
      {{{"seed", 1}, {"function", kAlgebra}, {"checks", {"theorem3"}}},
       "check 'theorem3' requires a control function"},
      {{{"seed", 1}, {"function", kAlgebra}, {"checks", {"classical"}}},
       "check 'classical' requires classicalP"},
      {{{"seed", 1},
        {"function", kAlgebra},
        {"classicalP", 3.0},
        {"classicalC", "preset"},
        {"checks", {"classical"}}},
       "supply a positive classicalC or use p < 2"},
      {{{"seed", 1},
        {"function", kAlgebra},
        {"classicalP", 2.0},
        {"classicalC", "preset"},
        {"checks", {"classical"}}},
       "supply a positive classicalC or use p < 2"},
      {{{"seed", 1},
        {"function", kAlgebra},
        {"classicalP", 1.0},
        {"classicalC", -2.0},
        {"checks", {"classical"}}},
       "classicalC must be positive"},
      {{{"seed", 1},
        {"function", kAlgebra},
        {"classicalP", 1.0},
        {"classicalC", "sharp"},
        {"checks", {"classical"}}},
       "classicalC must be a number or \"preset\""},
      {{{"seed", 1}, {"dim", 2}, {"function", kAlgebra}, {"checks", {"hyers"}}},
       "does not match dim = 2"},
      {{{"seed", 1}, {"function", {{"kind", "mystery"}}}, {"checks", {"hyers"}}},
       "function.kind 'mystery' is unknown"},
      {{{"seed", 1},
        {"function", {{"kind", "algebraExample"}, {"x0", {2.0}}}},
        {"checks", {"hyers"}}},
       "sup-norm unit vector"},
      {{{"seed", 1}, {"pexider", {{"f", kAlgebra}, {"g", kAlgebra}}},
        {"control", {{"kind", "powerSum"}, {"p", 0.5}}},
        {"checks", {"control_bounded"}}},
       "pexider requires f, g and h"},
      {{{"seed", 1}, {"function", kAlgebra}, {"checks", {"dual_decay"}}},
       "requires a perturbedQuadratic"},
      {{{"seed", 1},
        {"function", kAlgebra},
        {"control", {{"kind", "example34Phi"}, {"z0Norm", -1.0}}},
        {"checks", {"alpha"}}},
       "z0Norm must be finite and nonnegative"},
  };

  for (const auto& [cfg, needle] : cases) {
    CAPTURE(needle);
    const std::string msg = load_error(cfg);
    CHECK(!msg.empty());
    CHECK(msg.find(needle) != std::string::npos);
  }
}

TEST_CASE("theorem1 subsumes remark22; pexider checks fall back to (f, f, f)") {
  ojson j = determinism_config();
  j["checks"] = {"theorem1", "remark22"};
  const ScenarioConfig cfg = load_scenario(j);
  CHECK(cfg.checks == std::vector<std::string>{"theorem1"});

  ojson k = {{"seed", 5},
             {"dim", 1},
             {"function", kAlgebra},
             {"control", {{"kind", "powerSum"}, {"p", 0.5}}},
             {"checks", {"prop1"}}};
  const ScenarioConfig withFallback = load_scenario(k);
  REQUIRE(withFallback.pexider);
  Vec x(1);
  x << 2.5;
  const Vec fx = eval_function(*withFallback.function, x);
  CHECK(eval_function(withFallback.pexider->f(), x) == fx);
  CHECK(eval_function(withFallback.pexider->g(), x) == fx);
  CHECK(eval_function(withFallback.pexider->h(), x) == fx);

  // An explicit triple is kept as given.
  ojson m = k;
  ojson h = kAlgebra;
  m["pexider"] = {{"f", kAlgebra}, {"g", kAlgebra}, {"h", h}};
  CHECK(load_scenario(m).pexider.has_value());
}

TEST_CASE("builtin scenarios are listed and all load") {
  const auto& infos = list_builtins();
  REQUIRE(infos.size() == 10);
  const std::set<std::string> expected = {
      "axiom-suite",    "theorem1-algebra",   "remark22-variant", "qalmost-algebra",
      "classical-corollary", "dual-remark25", "prop1-odd",        "prop2-even",
      "theorem3-combined",   "example34-innerproduct"};
  std::set<std::string> got;
  for (const auto& info : infos) {
    got.insert(info.name);
    CHECK(!info.description.empty());
    CHECK(is_builtin(info.name));
    const ScenarioConfig cfg = load_scenario(builtin_config(info.name));
    CHECK(cfg.name == info.name);
    CHECK(!cfg.checks.empty());
  }
  CHECK(got == expected);
  CHECK_FALSE(is_builtin("nope"));
  CHECK_THROWS_AS((void)builtin_config("nope"), ConfigError);
}

TEST_CASE("config files load and bad files are reported") {
  const fs::path dir = fresh_dir("configs");
  fs::create_directories(dir);
  const fs::path good = dir / "good.json";
  std::ofstream(good) << determinism_config().dump(2);
  CHECK(load_scenario_file(good.string()).name == "mini");

  CHECK_THROWS_WITH_AS((void)load_scenario_file((dir / "missing.json").string()),
                       doctest::Contains("cannot read config file"), ConfigError);

  const fs::path broken = dir / "broken.json";
  std::ofstream(broken) << "not json{";
  CHECK_THROWS_WITH_AS((void)load_scenario_file(broken.string()),
                       doctest::Contains("not valid JSON"), ConfigError);
}

TEST_CASE("runs are deterministic and independent of the job count") {
  const ScenarioConfig cfg = load_scenario(determinism_config());
  const RunResult a = run_scenario(cfg);
  const RunResult b = run_scenario(cfg);
  const RunResult c = run_scenario(cfg, 4);

  REQUIRE(a.reports.size() == 3);  // hyers + theorem1 + the sharper variant
  CHECK(a.reports[0].inequalityId == "hyers");
  CHECK(a.reports[1].inequalityId == "theorem1");
  CHECK(a.reports[2].inequalityId == "remark22");
  CHECK(a.exit_status() == kExitOk);
  CHECK(a.traces.size() == 2);

  CHECK(report_csv(a) == report_csv(b));
  CHECK(report_csv(a) == report_csv(c));
  CHECK(report_json(a).dump(2) == report_json(c).dump(2));

  CHECK_THROWS_AS((void)run_scenario(cfg, 0), ConfigError);
  CHECK_THROWS_WITH_AS((void)run_scenario(ScenarioConfig{}),
                       doctest::Contains("fuzzy norms are not resolved"), ConfigError);
}

TEST_CASE("exit status distinguishes inequality and convergence failures") {
  ojson shrunk = builtin_config("prop1-odd");
  shrunk["checks"] = {"control_bounded"};
  shrunk["sampleCount"] = 6;
  shrunk["control"]["z0Norm"] = 0.5;
  const RunResult bad = run_scenario(load_scenario(shrunk));
  REQUIRE(bad.reports.size() == 1);
  CHECK(bad.reports[0].failCount > 0);
  CHECK(bad.exit_status() == kExitInequalityFailure);

  ojson stuck = builtin_config("dual-remark25");
  stuck["checks"] = {"hyers"};
  stuck["iteration"] = "directQuadratic";
  stuck["sampleCount"] = 4;
  stuck["maxN"] = 12;
  const RunResult diverged = run_scenario(load_scenario(stuck));
  REQUIRE(diverged.reports.size() == 1);
  CHECK(diverged.reports[0].convergenceFailures == 4);
  // Convergence trouble outranks plain inequality failures.
  CHECK(diverged.reports[0].failCount > 0);
  CHECK(diverged.exit_status() == kExitConvergenceFailure);
}

TEST_CASE("format_double keeps 17 significant digits and round-trips") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-2.25) == "-2.25");
  CHECK(format_double(0.1) == "0.10000000000000001");

  const std::vector<double> values = {0.0,    1.0 / 3.0, 3.141592653589793, 6.02214076e23,
                                      1e-300, -7.062e-9, 2.2250738585072014e-308,
                                      4.9406564584124654e-324};
  for (double v : values) {
    CAPTURE(v);
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("report_csv sorts rows by check, sample and t") {
  RunResult r;
  r.scenario = "manual";
  r.seed = 1;
  StabilityReport bound;
  bound.inequalityId = "bound";
  bound.add(2, 1.0, 1.0, 0.5);
  bound.add(0, 2.0, 1.0, 0.25);
  bound.add(0, 1.0, 0.0, 0.5);
  StabilityReport aux;
  aux.inequalityId = "aux";
  aux.add(5, 0.5, 0.75, 0.75);
  r.reports = {bound, aux};

  CHECK(bound.failCount == 1);
  CHECK(bound.minMargin == -0.5);
  CHECK(r.exit_status() == kExitInequalityFailure);

  const std::string expected =
      "scenario,check,xId,t,lhs,rhs,margin,pass\n"
      "manual,aux,5,0.5,0.75,0.75,0,1\n"
      "manual,bound,0,1,0,0.5,-0.5,0\n"
      "manual,bound,0,2,1,0.25,0.75,1\n"
      "manual,bound,2,1,1,0.5,0.5,1\n";
  CHECK(report_csv(r) == expected);
}

TEST_CASE("json and trace reports carry the run") {
  const RunResult r = run_scenario(load_scenario(determinism_config()));
  const ojson j = report_json(r);
  CHECK(j.at("scenario") == "mini");
  CHECK(j.at("seed") == 123456);
  CHECK(j.at("exitStatus") == 0);
  REQUIRE(j.at("checks").size() == 3);
  CHECK(j.at("checks")[0].at("check") == "hyers");
  CHECK(j.at("checks")[1].at("rows") == 6 * 16);
  CHECK(j.at("checks")[1].contains("minMargin"));
  REQUIRE(j.at("traces").size() == 2);
  CHECK(j.at("traces")[0].at("iteration") == "directQuadratic");
  CHECK(j.at("traces")[0].at("converged") == true);

  const HyersTrace& tr = r.traces[0].second;
  const std::string csv = trace_csv(tr);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,t,membership,successiveError");
  std::size_t rows = 0;
  std::string first;
  while (std::getline(lines, line)) {
    if (rows == 0) first = line;
    ++rows;
  }
  CHECK(rows == tr.iterates.size() * tr.gridPoints.size());
  CHECK(first.rfind("0,0.001,", 0) == 0);
  CHECK(first.substr(first.size() - 2) == ",0");  // no step error before n = 1

  ojson axiomCfg = {{"seed", 9}, {"dim", 2}, {"sampleCount", 8}, {"checks", {"axioms"}}};
  const RunResult ax = run_scenario(load_scenario(axiomCfg));
  REQUIRE(ax.axioms.size() == 3);
  const ojson aj = report_json(ax);
  REQUIRE(aj.contains("axioms"));
  CHECK(aj.at("axioms").size() == 3);
  CHECK(aj.at("axioms")[0].at("norm") == "X");
  CHECK(aj.at("axioms")[0].at("pass") == true);
  CHECK(aj.at("axioms")[0].at("tuplesChecked") > 0);
}

TEST_CASE("emit_report writes byte-identical files across runs") {
  const ScenarioConfig cfg = load_scenario(determinism_config());
  const fs::path dirA = fresh_dir("emit-a");
  const fs::path dirB = fresh_dir("emit-b");
  const auto pathsA = emit_report(run_scenario(cfg), dirA.string());
  const auto pathsB = emit_report(run_scenario(cfg, 4), dirB.string());

  REQUIRE(pathsA.size() == 4);  // report.csv, report.json, two traces
  REQUIRE(pathsB.size() == 4);
  CHECK(fs::path(pathsA[0]).filename() == "report.csv");
  CHECK(fs::path(pathsA[1]).filename() == "report.json");
  CHECK(fs::path(pathsA[2]).filename() == "trace_0.csv");
  CHECK(fs::path(pathsA[3]).filename() == "trace_1.csv");
  for (std::size_t i = 0; i < pathsA.size(); ++i) {
    CAPTURE(pathsA[i]);
    const std::string a = read_file(pathsA[i]);
    CHECK(!a.empty());
    CHECK(a == read_file(pathsB[i]));
  }
}
