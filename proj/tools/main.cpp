#include "fuzzystab/report_io.hpp"
#include "fuzzystab/scenario.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace fuzzystab;

std::string resolve_out_dir(const std::string& flag, const std::string& scenarioName) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("FUZZYSTAB_OUT"); env && *env) {
    return std::string(env) + "/" + scenarioName;
  }
  return "out/" + scenarioName;
}

int do_run(const std::string& target, const std::string& outFlag,
           const std::optional<std::uint64_t>& seed, int jobs) {
  nlohmann::ordered_json cfgJson;
  if (is_builtin(target)) {
    cfgJson = builtin_config(target);
  } else {
    std::ifstream in(target);
    if (!in) throw ConfigError("cannot read config file '" + target + "' (not a builtin either)");
    try {
      in >> cfgJson;
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError("config file '" + target + "' is not valid JSON: " + std::string(e.what()));
    }
  }
  if (seed) cfgJson["seed"] = *seed;

  const ScenarioConfig cfg = load_scenario(cfgJson);
  const RunResult result = run_scenario(cfg, jobs);
  const std::string outDir = resolve_out_dir(outFlag, cfg.name);
  const auto paths = emit_report(result, outDir);

  std::cout << "scenario " << result.scenario << " (seed " << result.seed << ")\n";
  for (const auto& a : result.axioms) {
    std::cout << "  axioms[" << a.norm << "]: " << (a.report.allPass() ? "pass" : "FAIL") << " ("
              << a.report.totalTuples() << " tuples)\n";
  }
  if (result.alpha) {
    std::cout << "  alpha estimate " << result.alpha->alpha << " (max residual "
              << result.alpha->maxResidual << ", " << result.alpha->usedSamples << " samples)\n";
  }
  for (const auto& rep : result.reports) {
    std::cout << "  " << rep.inequalityId << ": rows=" << rep.rows.size()
              << " fail=" << rep.failCount << " convFail=" << rep.convergenceFailures;
    if (!rep.rows.empty()) std::cout << " minMargin=" << rep.minMargin;
    std::cout << "\n";
  }
  for (const auto& p : paths) std::cout << "wrote " << p << "\n";
  const int status = result.exit_status();
  std::cout << "exit status " << status << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for fuzzy normed spaces and quadratic stability bounds"};
  app.require_subcommand(1);

  auto* runCmd = app.add_subcommand("run", "run a scenario (builtin name or JSON config path)");
  std::string target;
  std::string outDir;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  runCmd->add_option("config", target, "builtin scenario name or path to a JSON config")
      ->required();
  runCmd->add_option("--out", outDir,
                     "output directory (default out/<scenario>; FUZZYSTAB_OUT overrides the base)");
  runCmd->add_option("--seed", seed, "override the config seed");
  runCmd->add_option("--jobs", jobs, "run independent checks concurrently when > 1")
      ->check(CLI::PositiveNumber);

  auto* listCmd = app.add_subcommand("list", "list builtin scenarios");

  auto* descCmd = app.add_subcommand("describe", "print a builtin scenario config as JSON");
  std::string builtinName;
  descCmd->add_option("builtin", builtinName, "builtin scenario name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (listCmd->parsed()) {
      for (const auto& info : fuzzystab::list_builtins()) {
        std::printf("%-24s %s\n", info.name.c_str(), info.description.c_str());
      }
      return fuzzystab::kExitOk;
    }
    if (descCmd->parsed()) {
      std::cout << fuzzystab::builtin_config(builtinName).dump(2) << "\n";
      return fuzzystab::kExitOk;
    }
    return do_run(target, outDir, seed, jobs);
  } catch (const fuzzystab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return fuzzystab::kExitConfigError;
  } catch (const std::overflow_error& e) {
    std::cerr << "iteration overflow: " << e.what() << "\n";
    return fuzzystab::kExitConvergenceFailure;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return fuzzystab::kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return fuzzystab::kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fuzzystab::kExitConfigError;
  }
}
