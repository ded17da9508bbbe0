#pragma once

#include <chrono>
#include <exception>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace wick {

/// Outcome of one numerical identity check. `passed` is always
/// `residual <= tolerance`; build reports through make_report() to keep it so.
struct CheckReport {
  std::string id;
  std::string anchor;  // short name of the identity being checked
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double wall_seconds = 0.0;
  std::vector<std::pair<std::string, double>> components;  // named sub-residuals
  std::string note;
};

CheckReport make_report(std::string id, std::string anchor, double residual, double tolerance);

/// Report whose residual is the maximum of the named components.
CheckReport make_report(std::string id, std::string anchor,
                        std::vector<std::pair<std::string, double>> components, double tolerance);

/// Runs `fn` (returning a CheckReport) and stamps its wall time. Exceptions
/// escaping `fn` become a failed report with the message in `note`.
template <class Fn>
CheckReport timed_check(const std::string& id, const std::string& anchor, double tolerance, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport r;
  try {
    r = fn();
  } catch (const std::exception& e) {
    r = make_report(id, anchor, std::numeric_limits<double>::infinity(), tolerance);
    r.note = e.what();
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace wick
