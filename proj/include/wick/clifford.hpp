#pragma once

// Complex Clifford representations for signature (t, s) with the convention
//
//   γ(v)γ(w) + γ(w)γ(v) = −2 g(v, w),   g = diag(−1 × t, +1 × s),
//
// so timelike generators square to +1 and spacelike ones to −1. Directions
// are stored 0-based with the t timelike ones first.

#include <optional>
#include <vector>

#include "wick/operator_core.hpp"

namespace wick {

struct CliffordRep {
  int t = 0;
  int s = 0;
  std::vector<CMatrix> generators;     // γ(e_0), …, γ(e_{n−1})
  std::optional<CMatrix> grading;      // Γ_M, even n only
  CMatrix fundamental_symmetry;        // J_M

  int n() const { return t + s; }
  Index dim() const { return fundamental_symmetry.rows(); }
};

/// κ(j) = −1 for timelike directions (j < t), +1 otherwise.
double kappa(const CliffordRep& rep, int j);

/// Generators of size 2^⌊n/2⌋ from Jordan–Wigner Hermitian Euclidean
/// generators Γ_j: timelike γ_j = Γ_j, spacelike γ_j = iΓ_j. Then
///   J_M = i^{t(t−1)/2} γ_0⋯γ_{t−1},
///   Γ_M = i^{−t + n(n+1)/2} γ_0⋯γ_{n−1}   (even n).
CliffordRep build_clifford(int t, int s);

enum class WickSign { plus, minus };

/// γ±(e_j) = ±iγ(e_j) for timelike j, γ(e_j) for spacelike j. The result is a
/// Riemannian representation (t = 0), so its grading is i^{n(n+1)/2}∏γ± and
/// its fundamental symmetry is the identity.
CliffordRep wick_rotate_clifford(const CliffordRep& rep, WickSign sign);

/// The sign relating the rotated grading to Γ_M: Γ^± = (∓1)^t Γ_M.
/// For odd t (Lorentzian t = 1 in particular) this is ∓1.
double rotated_grading_sign(int t, WickSign sign);

/// X^♯ = J_M X* J_M.
CMatrix krein_adjoint(const CliffordRep& rep, const CMatrix& x);
GradedOperator krein_adjoint(const CliffordRep& rep, const GradedOperator& x);

// Residuals (Frobenius, maximised over generators or pairs).

/// γ_iγ_j + γ_jγ_i + 2δ_ij κ(j).
double clifford_relation_residual(const CliffordRep& rep);
/// max(‖J − J*‖, ‖J² − 1‖).
double fundamental_symmetry_residual(const CliffordRep& rep);
/// J γ(e_j) J − (−1)^t γ(r e_j), r flipping the timelike directions.
double reflection_residual(const CliffordRep& rep);
/// Γ_M self-adjoint, Γ_M² = 1, Γ_M γ_j + γ_j Γ_M = 0. Zero for odd n.
double grading_residual(const CliffordRep& rep);

}  // namespace wick
