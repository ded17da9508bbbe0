#include "wick/report.hpp"

#include <cmath>

#include "wick/matrix_io.hpp"

namespace wick {

namespace {

nlohmann::json number(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

nlohmann::json matrix_json(const CMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json components = nlohmann::json::array();
  for (const auto& [name, value] : r.components) components.push_back({name, number(value)});
  return {{"id", r.id},
          {"anchor", r.anchor},
          {"residual", number(r.residual)},
          {"tolerance", number(r.tolerance)},
          {"passed", r.passed},
          {"wall_seconds", r.wall_seconds},
          {"components", std::move(components)},
          {"note", r.note}};
}

nlohmann::json to_json(const SuiteConfig& c) {
  return {{"suite", c.suite},
          {"seed", c.seed},
          {"tolerance", {{"exact", c.tol.exact}, {"truncation", c.tol.truncation}, {"spectral", c.tol.spectral}}},
          {"oscillator", {{"d", c.oscillator.d}, {"N", c.oscillator.N}, {"omega", c.oscillator.omega},
                          {"margin", c.oscillator.margin}}},
          {"cylinder", {{"n_theta", c.cylinder.n_theta}, {"n_t", c.cylinder.n_t}, {"l_theta", c.cylinder.l_theta},
                        {"l_t", c.cylinder.l_t}, {"metric", c.cylinder.metric},
                        {"spin", std::string(to_string(c.cylinder.spin))},
                        {"stencil", std::string(to_string(c.cylinder.stencil))}}},
          {"sweep", {{"metric", c.sweep.metric}, {"fixed_n_t", c.sweep.fixed_n_t},
                     {"bounded_sizes", c.sweep.bounded_sizes}, {"counter_n_theta", c.sweep.counter_n_theta},
                     {"counter_sizes", c.sweep.counter_sizes}}}};
}

nlohmann::json suite_report(const SuiteConfig& config, const SuiteResult& result) {
  nlohmann::json checks = nlohmann::json::array();
  int failed = 0;
  for (const auto& r : result.checks) {
    checks.push_back(to_json(r));
    if (!r.passed) ++failed;
  }
  return {{"schema", kReportSchema},
          {"suite", result.suite},
          {"seed", config.seed},
          {"config", to_json(config)},
          {"passed", failed == 0},
          {"summary", {{"total", result.checks.size()}, {"failed", failed}}},
          {"checks", std::move(checks)}};
}

nlohmann::json error_report(const std::string& type, const std::string& message) {
  return {{"schema", kReportSchema}, {"passed", false}, {"error", {{"type", type}, {"message", message}}}};
}

nlohmann::json strip_timing(nlohmann::json j) {
  if (j.is_object()) {
    j.erase("wall_seconds");
    for (auto& [key, value] : j.items()) value = strip_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = strip_timing(value);
  }
  return j;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  io::write_file_atomically(path, j.dump(2) + "\n");
}

nlohmann::json to_json(const CliffordRep& rep) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : rep.generators) gens.push_back(matrix_json(g));
  nlohmann::json j{{"t", rep.t},
                   {"s", rep.s},
                   {"generators", std::move(gens)},
                   {"fundamental_symmetry", matrix_json(rep.fundamental_symmetry)}};
  j["grading"] = rep.grading ? matrix_json(*rep.grading) : nlohmann::json(nullptr);
  return j;
}

}  // namespace wick
