#pragma once

#include "fuzzystab/hyers.hpp"
#include "fuzzystab/scenario.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fuzzystab {

/// 17 significant digits, locale independent; round-trips exactly.
std::string format_double(double v);

/// Header "scenario,check,xId,t,lhs,rhs,margin,pass"; rows sorted by
/// (check, xId, t), ties kept in generation order.
std::string report_csv(const RunResult& result);

nlohmann::ordered_json report_json(const RunResult& result);

/// Long format: one row per (iteration index, grid point).
std::string trace_csv(const HyersTrace& trace);

/// Writes report.csv, report.json and trace_<xId>.csv files; returns the
/// paths written. Creates the directory if needed.
std::vector<std::string> emit_report(const RunResult& result, const std::string& outDir);

}  // namespace fuzzystab
