#include "fuzzystab/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <tuple>

namespace fuzzystab {
namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("failed while writing '" + path.string() + "'");
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string report_csv(const RunResult& result) {
  struct Line {
    const std::string* check;
    const ReportRow* row;
  };
  std::vector<Line> lines;
  for (const StabilityReport& rep : result.reports) {
    for (const ReportRow& row : rep.rows) lines.push_back({&rep.inequalityId, &row});
  }
  std::stable_sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    return std::tie(*a.check, a.row->xId, a.row->t) < std::tie(*b.check, b.row->xId, b.row->t);
  });

  std::string out = "scenario,check,xId,t,lhs,rhs,margin,pass\n";
  for (const Line& l : lines) {
    out += result.scenario;
    out += ',';
    out += *l.check;
    out += ',';
    out += std::to_string(l.row->xId);
    out += ',';
    out += format_double(l.row->t);
    out += ',';
    out += format_double(l.row->lhs);
    out += ',';
    out += format_double(l.row->rhs);
    out += ',';
    out += format_double(l.row->margin);
    out += ',';
    out += l.row->pass ? '1' : '0';
    out += '\n';
  }
  return out;
}

namespace {

nlohmann::ordered_json axiom_check_json(const AxiomCheck& c) {
  nlohmann::ordered_json j;
  j["pass"] = c.pass;
  j["tuplesChecked"] = c.tuplesChecked;
  if (std::isfinite(c.worstMargin)) j["worstMargin"] = c.worstMargin;
  if (c.counterexample) j["counterexample"] = c.counterexample->detail;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

}  // namespace

nlohmann::ordered_json report_json(const RunResult& result) {
  nlohmann::ordered_json j;
  j["scenario"] = result.scenario;
  j["seed"] = result.seed;
  j["exitStatus"] = result.exit_status();

  if (result.alpha) {
    j["alpha"] = {{"estimate", result.alpha->alpha},
                  {"maxResidual", result.alpha->maxResidual},
                  {"usedSamples", result.alpha->usedSamples},
                  {"degenerateSamples", result.alpha->degenerateSamples}};
  }

  if (!result.axioms.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (const LabeledAxiomReport& a : result.axioms) {
      nlohmann::ordered_json entry;
      entry["norm"] = a.norm;
      entry["pass"] = a.report.allPass();
      entry["tuplesChecked"] = a.report.totalTuples();
      entry["range"] = axiom_check_json(a.report.range);
      entry["vanishing"] = axiom_check_json(a.report.vanishing);
      entry["identity"] = axiom_check_json(a.report.identity);
      entry["homogeneity"] = axiom_check_json(a.report.homogeneity);
      entry["additivity"] = axiom_check_json(a.report.additivity);
      entry["monotone"] = axiom_check_json(a.report.monotone);
      arr.push_back(std::move(entry));
    }
    j["axioms"] = std::move(arr);
  }

  auto checks = nlohmann::ordered_json::array();
  for (const StabilityReport& rep : result.reports) {
    nlohmann::ordered_json entry;
    entry["check"] = rep.inequalityId;
    entry["rows"] = rep.rows.size();
    entry["failCount"] = rep.failCount;
    entry["convergenceFailures"] = rep.convergenceFailures;
    if (!rep.rows.empty() && std::isfinite(rep.minMargin)) entry["minMargin"] = rep.minMargin;
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);

  if (!result.traces.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [xId, tr] : result.traces) {
      arr.push_back({{"xId", xId},
                     {"iteration", to_string(tr.kind)},
                     {"converged", tr.converged},
                     {"nStop", tr.nStop}});
    }
    j["traces"] = std::move(arr);
  }
  return j;
}

std::string trace_csv(const HyersTrace& trace) {
  std::string out = "n,t,membership,successiveError\n";
  for (std::size_t n = 0; n < trace.iterates.size(); ++n) {
    const double err = n == 0 ? 0.0 : trace.successiveErrors[n - 1];
    for (std::size_t ti = 0; ti < trace.gridPoints.size(); ++ti) {
      out += std::to_string(n);
      out += ',';
      out += format_double(trace.gridPoints[ti]);
      out += ',';
      out += format_double(trace.memberships[n][ti]);
      out += ',';
      out += format_double(err);
      out += '\n';
    }
  }
  return out;
}

std::vector<std::string> emit_report(const RunResult& result, const std::string& outDir) {
  const fs::path dir(outDir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + dir.string() + "'");

  std::vector<std::string> written;
  const fs::path csvPath = dir / "report.csv";
  write_file(csvPath, report_csv(result));
  written.push_back(csvPath.string());

  const fs::path jsonPath = dir / "report.json";
  write_file(jsonPath, report_json(result).dump(2) + "\n");
  written.push_back(jsonPath.string());

  for (const auto& [xId, tr] : result.traces) {
    const fs::path tracePath = dir / ("trace_" + std::to_string(xId) + ".csv");
    write_file(tracePath, trace_csv(tr));
    written.push_back(tracePath.string());
  }
  return written;
}

}  // namespace fuzzystab
