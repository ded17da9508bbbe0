#pragma once

// JSON reports, schema version 1:
//
//   { "schema": 1, "suite": ..., "seed": ..., "config": {...},
//     "passed": bool, "summary": {"total": n, "failed": k},
//     "checks": [ {"id", "anchor", "residual", "tolerance", "passed",
//                  "wall_seconds", "components": [[name, value], ...],
//                  "note"} ] }
//
// Non-finite residuals are written as null. Everything except the
// wall_seconds fields is a deterministic function of config and seed.

#include <filesystem>
#include <string>

#include "json.hpp"
#include "wick/clifford.hpp"
#include "wick/config.hpp"
#include "wick/suites.hpp"

namespace wick {

inline constexpr int kReportSchema = 1;

nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const SuiteConfig& c);
nlohmann::json suite_report(const SuiteConfig& config, const SuiteResult& result);
/// {"schema": 1, "error": {"type": ..., "message": ...}}
nlohmann::json error_report(const std::string& type, const std::string& message);

/// Removes every "wall_seconds" field, recursively.
nlohmann::json strip_timing(nlohmann::json j);

/// Writes pretty-printed JSON atomically (temporary file, then rename).
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

/// Generators, grading and fundamental symmetry as nested [re, im] arrays.
nlohmann::json to_json(const CliffordRep& rep);

}  // namespace wick
