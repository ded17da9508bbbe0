#pragma once

// Finite shadows of the almost-(anti-)commuting conditions and of relative
// boundedness, plus refinement sweeps that watch those numbers as a lattice
// model grows.

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wick/operator_core.hpp"

namespace wick {

enum class BracketMode { commuting, anticommuting };

std::string_view to_string(BracketMode m);

/// {±¼, ±½, ±1, ±2, ±4}.
std::vector<double> default_mu_grid();

struct ConditionProbe {
  GradedOperator s;
  GradedOperator t;
  std::vector<double> mu_grid = default_mu_grid();
  BracketMode mode = BracketMode::anticommuting;
};

/// max over μ in the grid of ‖bracket(S,T)·(S − iμ)⁻¹‖.
double resolvent_bound(const ConditionProbe& probe, double tol = kExactTol);
double resolvent_bound(const CMatrix& s, const CMatrix& t, BracketMode mode, const std::vector<double>& mu_grid);

/// ‖bracket(S,T)·(S − iμ)⁻¹‖ for a single μ.
double resolvent_term(const CMatrix& s, const CMatrix& t, BracketMode mode, double mu);

/// ρ(A;B) = ‖A·(|B| + 1)⁻¹‖ for Hermitian B.
///
/// |B| is formed blockwise over the connected components of B's sparsity
/// pattern, so block-diagonal B (one block per time slice, say) never needs a
/// full eigendecomposition.
double relative_bound(const CMatrix& a, const CMatrix& b, double tol = kExactTol);
double relative_bound(const GradedOperator& a, const GradedOperator& b, double tol = kExactTol);

/// (|B| + 1)⁻¹, assembled blockwise as above.
CMatrix abs_plus_one_inverse(const CMatrix& b);

enum class Verdict { bounded, growing, inconclusive };

std::string_view to_string(Verdict v);

/// Values at or below this are treated as exact zeros by the sweep verdict.
inline constexpr double kSweepZero = 1e-10;

/// bounded: max/min ≤ 2 (or every value ≤ kSweepZero);
/// growing: last ≥ 3·first; otherwise inconclusive.
Verdict classify_sweep(const std::vector<double>& values);

struct BoundSweep {
  std::vector<std::pair<int, double>> rows;  // (refinement size, ρ)
  Verdict verdict = Verdict::inconclusive;
};

using SweepBuilder = std::function<std::pair<CMatrix, CMatrix>(int size)>;

/// Evaluates ρ(A;B) for the (A, B) built at each size. Sizes must be
/// strictly increasing with at least three entries.
BoundSweep refinement_sweep(const SweepBuilder& builder, const std::vector<int>& sizes);

/// CSV with header `size,rho,verdict`.
std::string sweep_csv(const BoundSweep& sweep);
void write_sweep_csv(const BoundSweep& sweep, const std::filesystem::path& path);

}  // namespace wick
