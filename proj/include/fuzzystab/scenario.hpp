#pragma once

#include "fuzzystab/axioms.hpp"
#include "fuzzystab/control.hpp"
#include "fuzzystab/functions.hpp"
#include "fuzzystab/fuzzy_norm.hpp"
#include "fuzzystab/hyers.hpp"
#include "fuzzystab/verifier.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fuzzystab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInequalityFailure = 1;
inline constexpr int kExitConvergenceFailure = 2;
inline constexpr int kExitConfigError = 3;

/// Any malformed or out-of-domain configuration value.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
  std::string name;
  int dim = 1;
  std::uint64_t seed = 0;
  int sampleCount = 32;
  double sampleRadius = 10.0;
  int traceCount = 3;
  double tol = 1e-9;
  double eps = 1e-6;
  int maxN = 60;
  int offDiagonalPairs = 32;
  IterationKind iteration = IterationKind::DirectQuadratic;
  std::vector<std::string> checks;
  TGrid grid = TGrid::standard();
  ClassicalNorm classical = ClassicalNorm::l2();
  std::optional<FuzzyNorm> fuzzyX, fuzzyY, fuzzyZ;
  std::optional<FunctionSpec> function;
  std::optional<PexiderTriple> pexider;
  std::optional<ControlFunction> control;
  std::optional<double> q;
  std::optional<double> classicalP;
  std::optional<double> classicalC;  // resolved at load (preset already applied)
  nlohmann::ordered_json raw;

  HyersOptions hyers_options() const { return {tol, eps, maxN, 0}; }
};

/// Validates every field and resolves defaults. The seed is mandatory.
ScenarioConfig load_scenario(const nlohmann::ordered_json& j);
ScenarioConfig load_scenario_file(const std::string& path);

struct BuiltinInfo {
  std::string name;
  std::string description;
};

const std::vector<BuiltinInfo>& list_builtins();
bool is_builtin(const std::string& name);
nlohmann::ordered_json builtin_config(const std::string& name);

struct LabeledAxiomReport {
  std::string norm;
  AxiomReport report;
};

struct RunResult {
  std::string scenario;
  std::uint64_t seed = 0;
  std::vector<StabilityReport> reports;
  std::vector<LabeledAxiomReport> axioms;
  std::optional<AlphaEstimate> alpha;
  std::vector<std::pair<int, HyersTrace>> traces;  // sample id -> trace

  int exit_status() const;
};

/// Executes every configured check. `jobs` > 1 runs checks concurrently;
/// results are identical to the sequential run.
RunResult run_scenario(const ScenarioConfig& cfg, int jobs = 1);

}  // namespace fuzzystab
