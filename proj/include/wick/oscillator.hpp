#pragma once

// Supersymmetric harmonic oscillator on a truncated Fock space.
//
// The tensor space is bosons ⊗ fermions with basis index
// boson_index · 2^d + fermion_index. Boson modes use a per-mode cutoff N
// (occupations 0 … N−1, mode 0 most significant); fermions are the 2^d
// Jordan–Wigner qubits with |1⟩ the occupied state. Operators are stored
// sparse because d = 3, N = 12 already gives dimension 13824.

#include <vector>

#include "wick/operator_core.hpp"

namespace wick {

/// Largest dimension that will be materialised as a dense GradedOperator.
inline constexpr Index kMaxDenseDim = 4096;

struct FockModel {
  int d = 1;
  int N = 8;
  double omega = 1.0;
  int margin = 2;

  Index boson_dim = 0;
  Index fermion_dim = 0;
  Index dim = 0;

  std::vector<SparseCMatrix> a;  // a_μ ⊗ 1
  std::vector<SparseCMatrix> b;  // 1 ⊗ b_μ
  Eigen::VectorXd grading_signs; // 1 ⊗ (−1)^{N_f}, diagonal
  std::vector<std::vector<int>> occupations;  // per basis state: n_0 … n_{d−1}
  std::vector<int> fermion_number;            // per basis state: N_f
};

/// a|n⟩ = √(2ωn)|n−1⟩ on span{|0⟩, …, |N−1⟩}, so [a, a*] = 2ω below the cutoff.
SparseCMatrix single_mode_annihilator(int N, double omega);

/// Jordan–Wigner annihilators b_μ on the 2^d exterior algebra.
std::vector<SparseCMatrix> fermion_annihilators(int d);

/// Requires d ≥ 1, N ≥ 4, 1 ≤ m < N, ω > 0.
FockModel build_fock_model(int d, int N, double omega, int margin = 2);

struct OscillatorPair {
  SparseCMatrix d1;  // Σ a_μ b_μ* + a_μ* b_μ
  SparseCMatrix d2;  // Σ a_μ b_μ + a_μ* b_μ*
};

OscillatorPair build_D1_D2(const FockModel& model);

/// D = ½(D1 + D2) + (i/2)(D1 − D2).
SparseCMatrix oscillator_indefinite(const FockModel& model);

/// H ⊗ 1 = Σ a_μ* a_μ + dω.
SparseCMatrix hamiltonian(const FockModel& model);
/// 1 ⊗ Σ with Σ = Σ_μ [b_μ*, b_μ].
SparseCMatrix fermion_sigma(const FockModel& model);
/// x_μ ⊗ 1 = (a_μ + a_μ*)/(2ω).
SparseCMatrix position(const FockModel& model, int mu);
/// ∂_μ ⊗ 1 = (a_μ − a_μ*)/2, so that a = ωx + ∂.
SparseCMatrix derivative(const FockModel& model, int mu);
/// 1 ⊗ (−1)^{N_f}.
SparseCMatrix grading(const FockModel& model);

/// Diagonal projector onto states with every n_μ ≤ N − 1 − m.
SparseCMatrix interior_projector(const FockModel& model);
Index interior_rank(const FockModel& model);

/// ‖P(X − Y)P‖_F.
double interior_residual(const SparseCMatrix& p, const SparseCMatrix& x, const SparseCMatrix& y);

/// K = Σ n_μ + N_f per basis state; D1 and D1² preserve it.
std::vector<int> excitation_sectors(const FockModel& model);

struct SectorSpectrum {
  Eigen::VectorXd eigenvalues;  // ascending
  std::vector<int> sectors;     // sector label of each eigenvalue
  double leakage = 0.0;         // Frobenius norm of entries coupling different sectors
};

/// Eigenvalues of a Hermitian sparse X restricted to the basis states with
/// `keep[i]`, solved densely per sector label.
SectorSpectrum sector_eigenvalues(const SparseCMatrix& x, const std::vector<int>& labels,
                                  const std::vector<bool>& keep);

/// Spectrum of P·D1²·P on the range of P.
SectorSpectrum interior_D1_squared_spectrum(const FockModel& model);
/// Analytic ladder 2ω(Σ n_μ + N_f) over the interior states, ascending.
Eigen::VectorXd interior_ladder(const FockModel& model);

/// Reorders d = 1 operators from boson ⊗ fermion to fermion ⊗ boson, where
/// D1 becomes [[0, a*], [a, 0]].
SparseCMatrix fermion_major(const FockModel& model, const SparseCMatrix& x);

/// Dense graded operator on the space with grading 1 ⊗ (−1)^{N_f}. Throws
/// InvalidArgument above kMaxDenseDim.
GradedOperator to_graded(const FockModel& model, const SparseCMatrix& x, Parity parity);

}  // namespace wick
