#include "wick/check_report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wick {

CheckReport make_report(std::string id, std::string anchor, double residual, double tolerance) {
  CheckReport r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.residual = residual;
  r.tolerance = tolerance;
  r.passed = residual <= tolerance;
  return r;
}

CheckReport make_report(std::string id, std::string anchor,
                        std::vector<std::pair<std::string, double>> components, double tolerance) {
  double worst = 0.0;
  // A NaN component must fail the report, which std::max alone would hide.
  for (const auto& [name, value] : components)
    worst = std::isnan(value) ? std::numeric_limits<double>::infinity() : std::max(worst, value);
  CheckReport r = make_report(std::move(id), std::move(anchor), worst, tolerance);
  r.components = std::move(components);
  return r;
}

}  // namespace wick
