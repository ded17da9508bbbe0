#pragma once

// Wick rotation, reverse Wick rotation and the 2×2 doubling constructions.

#include <array>
#include <string>
#include <utility>

#include "wick/check_report.hpp"
#include "wick/operator_core.hpp"

namespace wick {

/// A Hermitian pair (D₊, D₋), or equally (D₁, D₂).
struct WickPair {
  GradedOperator d_plus;
  GradedOperator d_minus;
};

/// A 2n×2n operator together with its four n×n blocks' labels.
struct DoubledOperator {
  Index base_dim = 0;
  GradedOperator op;
  std::array<std::string, 4> block_labels;  // row-major: 00, 01, 10, 11

  CMatrix block(int row, int col) const;
};

/// D± = Re D ± Im D.
WickPair wick_rotate(const GradedOperator& d);

/// D = ½(D1 + D2) + (i/2)(D1 − D2). Throws NotHermitian if either input is
/// not Hermitian to tol·max(1, ‖·‖_F).
GradedOperator reverse_wick(const GradedOperator& d1, const GradedOperator& d2, double tol = kExactTol);

/// Matrix-level versions, usable with dense or sparse storage.
template <class M>
std::pair<M, M> wick_rotate_matrix(const M& d) {
  M re = real_part_of(d);
  M im = imag_part_of(d);
  return {M(re + im), M(re - im)};
}

template <class M>
M reverse_wick_matrix(const M& d1, const M& d2) {
  return M(cplx(0.5, 0.5) * d1 + cplx(0.5, -0.5) * d2);
}

struct CommutingDoubling {
  DoubledOperator s;  // [[0, iS], [−iS, 0]]
  DoubledOperator t;  // [[0, T], [T, 0]]
};

/// Doubling that turns a commuting pair into an anti-commuting one:
/// {S̃,T̃} = i·diag([S,T], −[S,T]) and [S̃,T̃] = i·diag({S,T}, −{S,T}).
CommutingDoubling double_commuting(const GradedOperator& s, const GradedOperator& t, double tol = kExactTol);

struct OddEvenDoubling {
  DoubledOperator d;        // [[0, D₊], [D₋, 0]]
  DoubledOperator d_plus;   // [[0, D*], [D, 0]]
  DoubledOperator d_minus;  // [[0, D], [D*, 0]]
};

/// Odd-to-even doubling of an operator on an ungraded space. The doubled
/// space carries the grading diag(1, −1) and all three results are odd.
OddEvenDoubling double_odd_to_even(const GradedOperator& d);

/// W = [[0, −1], [1, 0]] on C^n ⊕ C^n.
CMatrix opposite_unitary(Index n);

/// Residuals of W·D̃₊·W* = −D̃₋, W·Γ·W* = −Γ, W* = −W and W*W = 1 for the
/// odd-to-even doubling of `d`.
CheckReport opposite_equivalence_check(const GradedOperator& d, double tol = kExactTol);

/// (S̃ − iμ)⁻¹ by direct inversion.
CMatrix doubled_resolvent(const CMatrix& s, double mu);

/// The same resolvent as the product
///   diag((S−iμ)⁻¹, (S−iμ)⁻¹) · [[iμR, iSR], [−iSR, iμR]],  R = (S+iμ)⁻¹.
struct ResolventFactors {
  CMatrix left;   // diag((S−iμ)⁻¹, (S−iμ)⁻¹)
  CMatrix right;  // the bounded second factor
};
ResolventFactors doubled_resolvent_factors(const CMatrix& s, double mu);

}  // namespace wick
