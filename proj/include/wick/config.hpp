#pragma once

// Suite configuration: an INI file with sections, overridden by CLI flags.
//
//   [run]        seed, suite
//   [tolerance]  exact, truncation, spectral
//   [oscillator] d, N, omega, margin
//   [cylinder]   n_theta, n_t, l_theta, l_t, metric, spin, stencil
//   [sweep]      fixed_n_t, bounded_sizes, counter_n_theta, counter_sizes
//   [output]     json

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wick/cylinder.hpp"
#include "wick/operator_core.hpp"

namespace wick {

struct Tolerances {
  double exact = kExactTol;
  double truncation = kTruncationTol;
  double spectral = kSpectralTol;
};

struct OscillatorParams {
  int d = 1;
  int N = 8;
  double omega = 1.0;
  int margin = 2;
};

/// Refinement sweeps: the t-dependent cylinder refines Nθ at fixed Nt; the
/// counter-model refines Nt at fixed Nθ.
struct SweepParams {
  std::string metric = "breathing";
  int fixed_n_t = 4;
  std::vector<int> bounded_sizes{32, 64, 128};
  int counter_n_theta = 4;
  std::vector<int> counter_sizes{32, 64, 128, 256};
};

struct SuiteConfig {
  std::string suite = "all";
  std::uint64_t seed = 42;
  Tolerances tol;
  OscillatorParams oscillator;
  CylinderConfig cylinder;
  SweepParams sweep;
  std::filesystem::path json_out;
};

/// Throws InvalidArgument for unknown keys' values that fail to parse or for
/// nonpositive tolerances.
SuiteConfig load_config(const std::filesystem::path& path);
void validate(const SuiteConfig& config);

std::vector<int> parse_int_list(const std::string& text);

}  // namespace wick
