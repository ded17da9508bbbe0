#pragma once

// First derivatives on a uniform periodic lattice of n points and period L.
// Every matrix here is real antisymmetric, so −i times it is Hermitian.

#include <string_view>

#include "wick/operator_core.hpp"

namespace wick {

enum class SpinStructure { periodic, antiperiodic };
enum class Stencil { spectral, central };

std::string_view to_string(SpinStructure s);
std::string_view to_string(Stencil s);
SpinStructure parse_spin_structure(std::string_view s);
Stencil parse_stencil(std::string_view s);

/// Spectral (Fourier) differentiation matrix. Periodic:
///   ∂_ij = (2π/L) · ½(−1)^{i−j} cot((i−j)π/n),
/// with the Nyquist mode sent to zero. Antiperiodic:
///   ∂_ij = (2π/L) · ½(−1)^{i−j} csc((i−j)π/n),
/// which differentiates exactly the half-integer modes. n must be even.
CMatrix spectral_derivative(int n, double length, SpinStructure bc);

/// Second-order central difference (f_{j+1} − f_{j−1})/(2h); the antiperiodic
/// wrap picks up a sign.
CMatrix central_derivative(int n, double length, SpinStructure bc);

CMatrix derivative_matrix(int n, double length, SpinStructure bc, Stencil stencil);

/// Eigenvalues of −i∂ for the chosen discretisation, ascending. These are
/// the symbols k·2π/L (spectral, Nyquist zeroed) or sin(kh)/h (central).
Eigen::VectorXd derivative_symbols(int n, double length, SpinStructure bc, Stencil stencil);

/// Lattice coordinates x_j = j·L/n.
Eigen::VectorXd lattice_points(int n, double length);

}  // namespace wick
