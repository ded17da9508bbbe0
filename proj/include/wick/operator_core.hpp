#pragma once

// Finite-dimensional graded operators: the common carrier for D, D*, Re D,
// Im D, the Wick rotations and everything assembled by the models.

#include <complex>
#include <memory>
#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "wick/errors.hpp"

namespace wick {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using SparseCMatrix = Eigen::SparseMatrix<cplx>;
using Index = Eigen::Index;

inline constexpr cplx kI{0.0, 1.0};

// Default tolerances for the three error sources: rounding in exact algebra,
// truncation edges after compression, and discretisation vs. a spectral oracle.
inline constexpr double kExactTol = 1e-12;
inline constexpr double kTruncationTol = 1e-10;
inline constexpr double kSpectralTol = 1e-8;

enum class Parity { even, odd, none };

std::string_view to_string(Parity p);

/// Parity of a product XY given the parities of X and Y.
Parity product_parity(Parity x, Parity y);

/// Hilbert space C^dim together with a grading involution.
class GradedSpace {
 public:
  /// Throws InvalidArgument unless `grading` is a self-adjoint involution
  /// (to within `tol`).
  explicit GradedSpace(CMatrix grading, double tol = kExactTol);

  Index dim() const { return grading_.rows(); }
  const CMatrix& grading() const { return grading_; }
  bool is_trivial() const { return trivial_; }

 private:
  CMatrix grading_;
  bool trivial_ = false;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

SpacePtr make_space(CMatrix grading);
/// Ungraded space: grading is the identity.
SpacePtr trivial_space(Index dim);
/// Grading diag(signs); every entry must be +1 or -1.
SpacePtr diagonal_space(const Eigen::VectorXd& signs);
/// E ⊕ E with grading diag(γ, -γ).
SpacePtr doubled_space(const GradedSpace& base);

bool same_space(const GradedSpace& a, const GradedSpace& b);

/// A square matrix on a graded space, tagged with its declared parity.
/// Parity is metadata: it is checked by validate_parity(), not on
/// construction, since intermediate products routinely mix parities.
class GradedOperator {
 public:
  GradedOperator(SpacePtr space, CMatrix matrix, Parity parity = Parity::none);

  const GradedSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const CMatrix& matrix() const { return matrix_; }
  Parity parity() const { return parity_; }
  Index dim() const { return matrix_.rows(); }

  GradedOperator with_parity(Parity p) const;
  GradedOperator with_matrix(CMatrix m) const;

  /// Frobenius norm of γX - (-1)^{|X|} Xγ for the declared parity; 0 for none.
  double parity_residual() const;
  /// Throws ParityError if parity_residual() exceeds tol·max(1, ‖X‖_F).
  void validate_parity(double tol = kExactTol) const;

 private:
  SpacePtr space_;
  CMatrix matrix_;
  Parity parity_;
};

void require_same_space(const GradedOperator& x, const GradedOperator& y, std::string_view what);

GradedOperator operator+(const GradedOperator& x, const GradedOperator& y);
GradedOperator operator-(const GradedOperator& x, const GradedOperator& y);
GradedOperator operator-(const GradedOperator& x);
GradedOperator operator*(const GradedOperator& x, const GradedOperator& y);
GradedOperator operator*(cplx s, const GradedOperator& x);

GradedOperator identity_on(const SpacePtr& space);
GradedOperator zero_on(const SpacePtr& space);

GradedOperator adjoint(const GradedOperator& x);

/// Re D = ½(D + D*).
GradedOperator real_part(const GradedOperator& d);
/// Im D = -(i/2)(D - D*).
GradedOperator imag_part(const GradedOperator& d);

template <class M>
M real_part_of(const M& d) {
  M adj = d.adjoint();
  return M(0.5 * (d + adj));
}

template <class M>
M imag_part_of(const M& d) {
  M adj = d.adjoint();
  return M(cplx(0.0, -0.5) * (d - adj));
}

/// XY - YX and XY + YX regardless of parity.
GradedOperator commutator(const GradedOperator& x, const GradedOperator& y);
GradedOperator anticommutator(const GradedOperator& x, const GradedOperator& y);

/// [X,Y]_± = XY - (-1)^{|X||Y|} YX. Both operands must be homogeneous;
/// ParityError otherwise.
GradedOperator graded_commutator(const GradedOperator& x, const GradedOperator& y);
/// XY + (-1)^{|X||Y|} YX, the complementary bracket.
GradedOperator graded_anticommutator(const GradedOperator& x, const GradedOperator& y);

/// (φ|ψ)_{S,T} = (φ|ψ) + (Sφ|Sψ) + (Tφ|Tψ), conjugate-linear in φ.
class GraphInnerProduct {
 public:
  GraphInnerProduct(GradedOperator s, GradedOperator t);

  cplx operator()(const CVector& phi, const CVector& psi) const;
  /// Gram matrix G_ij = (b_i|b_j)_{S,T} over the columns of `basis`.
  CMatrix gram(const CMatrix& basis) const;

  const GradedOperator& s() const { return s_; }
  const GradedOperator& t() const { return t_; }

 private:
  GradedOperator s_;
  GradedOperator t_;
};

cplx graph_inner(const GradedOperator& s, const GradedOperator& t, const CVector& phi,
                 const CVector& psi);

/// Largest singular value.
double operator_norm(const CMatrix& x);
double operator_norm(const GradedOperator& x);

/// Frobenius norm of X - X*.
double hermitian_residual(const CMatrix& x);
double hermitian_residual(const GradedOperator& x);
double hermitian_residual(const SparseCMatrix& x);

/// Frobenius norm of X - Y, an upper bound for the operator-norm distance.
double residual(const CMatrix& x, const CMatrix& y);
double residual(const GradedOperator& x, const GradedOperator& y);
double residual(const SparseCMatrix& x, const SparseCMatrix& y);

/// Throws NotHermitian if hermitian_residual(x) > tol·max(1, ‖x‖_F).
void require_hermitian(const CMatrix& x, std::string_view what, double tol = kExactTol);
void require_hermitian(const GradedOperator& x, std::string_view what, double tol = kExactTol);

/// Ascending eigenvalues of a Hermitian matrix (lower triangle is read).
Eigen::VectorXd hermitian_eigenvalues(const CMatrix& x);

/// Kronecker product a ⊗ b.
CMatrix kron(const CMatrix& a, const CMatrix& b);
SparseCMatrix kron(const SparseCMatrix& a, const SparseCMatrix& b);

}  // namespace wick
