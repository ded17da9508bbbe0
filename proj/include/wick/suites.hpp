#pragma once

// Named check suites. Each family function returns one CheckReport per
// identity; run_suite() dispatches on the suite name.

#include <string>
#include <vector>

#include "wick/check_report.hpp"
#include "wick/config.hpp"
#include "wick/kl_conditions.hpp"
#include "wick/random.hpp"

namespace wick {

inline const std::vector<std::string> kSuiteNames{"core-identities", "rotations", "kl-probes", "clifford",
                                                  "oscillator",      "cylinder",  "all"};

std::vector<CheckReport> core_identity_checks(RandomSource& rng, const Tolerances& tol,
                                              const std::vector<Index>& dims = {2, 8, 64, 256}, int samples = 3);
std::vector<CheckReport> rotation_checks(RandomSource& rng, const Tolerances& tol,
                                         const std::vector<Index>& dims = {2, 8, 64, 256}, int samples = 3);
std::vector<CheckReport> kl_probe_checks(RandomSource& rng, const Tolerances& tol);
std::vector<CheckReport> clifford_checks(const Tolerances& tol, int max_n = 6);
std::vector<CheckReport> oscillator_checks(const OscillatorParams& params, const Tolerances& tol);
std::vector<CheckReport> cylinder_checks(const CylinderConfig& config, const Tolerances& tol);
std::vector<CheckReport> sweep_checks(const SweepParams& params, const CylinderConfig& base);

/// ρ({Re D̸, Im D̸}; Re D̸) for the cylinder at each Nθ with Nt fixed.
BoundSweep lorentzian_sweep(const SweepParams& params, const CylinderConfig& base);
/// ρ({S, T}; S) for the counter-model at each Nt with Nθ fixed.
BoundSweep counter_model_sweep(const SweepParams& params);

/// Gate for a sweep expected to stay bounded: residual max/min, tolerance 2
/// (residual 1 when every value is at most kSweepZero).
CheckReport bounded_sweep_report(const std::string& id, const BoundSweep& sweep);
/// Gate for a sweep expected to grow: residual 3·first/last, tolerance 1.
CheckReport growing_sweep_report(const std::string& id, const BoundSweep& sweep);

struct SuiteResult {
  std::string suite;
  std::vector<CheckReport> checks;
  bool all_passed() const;
};

/// Throws InvalidArgument for unknown suite names or invalid model
/// parameters; individual check failures are recorded in the result.
SuiteResult run_suite(const SuiteConfig& config);

}  // namespace wick
