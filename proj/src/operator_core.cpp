#include "wick/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace wick {

std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::even:
      return "even";
    case Parity::odd:
      return "odd";
    case Parity::none:
      return "none";
  }
  return "none";
}

Parity product_parity(Parity x, Parity y) {
  if (x == Parity::none || y == Parity::none) return Parity::none;
  return x == y ? Parity::even : Parity::odd;
}

namespace {

double scale_of(const CMatrix& x) { return std::max(1.0, x.norm()); }

// Parity of a sum: homogeneous only when both summands agree.
Parity sum_parity(Parity x, Parity y) { return x == y ? x : Parity::none; }

}  // namespace

GradedSpace::GradedSpace(CMatrix grading, double tol) : grading_(std::move(grading)) {
  if (grading_.rows() == 0 || grading_.rows() != grading_.cols()) {
    throw InvalidArgument("GradedSpace: grading must be a non-empty square matrix");
  }
  const Index n = grading_.rows();
  const CMatrix id = CMatrix::Identity(n, n);
  if ((grading_ - grading_.adjoint()).norm() > tol * scale_of(grading_)) {
    throw InvalidArgument("GradedSpace: grading is not self-adjoint");
  }
  if ((grading_ * grading_ - id).norm() > tol * std::sqrt(static_cast<double>(n))) {
    throw InvalidArgument("GradedSpace: grading does not square to the identity");
  }
  trivial_ = (grading_ - id).norm() == 0.0;
}

SpacePtr make_space(CMatrix grading) { return std::make_shared<const GradedSpace>(std::move(grading)); }

SpacePtr trivial_space(Index dim) {
  if (dim <= 0) throw InvalidArgument("trivial_space: dimension must be positive");
  return make_space(CMatrix::Identity(dim, dim));
}

SpacePtr diagonal_space(const Eigen::VectorXd& signs) {
  for (Index i = 0; i < signs.size(); ++i) {
    if (signs(i) != 1.0 && signs(i) != -1.0) {
      throw InvalidArgument("diagonal_space: grading entries must be +1 or -1");
    }
  }
  return make_space(signs.cast<cplx>().asDiagonal());
}

SpacePtr doubled_space(const GradedSpace& base) {
  const Index n = base.dim();
  CMatrix g = CMatrix::Zero(2 * n, 2 * n);
  g.topLeftCorner(n, n) = base.grading();
  g.bottomRightCorner(n, n) = -base.grading();
  return make_space(std::move(g));
}

bool same_space(const GradedSpace& a, const GradedSpace& b) {
  if (&a == &b) return true;
  return a.dim() == b.dim() && a.grading() == b.grading();
}

GradedOperator::GradedOperator(SpacePtr space, CMatrix matrix, Parity parity)
    : space_(std::move(space)), matrix_(std::move(matrix)), parity_(parity) {
  if (!space_) throw InvalidArgument("GradedOperator: null space");
  if (matrix_.rows() != space_->dim() || matrix_.cols() != space_->dim()) {
    throw DimensionMismatch("GradedOperator: matrix is " + std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()) + ", space has dimension " +
                            std::to_string(space_->dim()));
  }
}

GradedOperator GradedOperator::with_parity(Parity p) const { return {space_, matrix_, p}; }

GradedOperator GradedOperator::with_matrix(CMatrix m) const { return {space_, std::move(m), parity_}; }

double GradedOperator::parity_residual() const {
  if (parity_ == Parity::none) return 0.0;
  if (space_->is_trivial()) {
    return parity_ == Parity::even ? 0.0 : 2.0 * matrix_.norm();
  }
  const CMatrix& g = space_->grading();
  const double sign = parity_ == Parity::even ? 1.0 : -1.0;
  return (g * matrix_ - sign * (matrix_ * g)).norm();
}

void GradedOperator::validate_parity(double tol) const {
  const double r = parity_residual();
  if (r > tol * scale_of(matrix_)) {
    throw ParityError("operator declared " + std::string(to_string(parity_)) +
                      " violates the grading (residual " + std::to_string(r) + ")");
  }
}

void require_same_space(const GradedOperator& x, const GradedOperator& y, std::string_view what) {
  if (!same_space(x.space(), y.space())) {
    throw DimensionMismatch(std::string(what) + ": operands live on different spaces");
  }
}

GradedOperator operator+(const GradedOperator& x, const GradedOperator& y) {
  require_same_space(x, y, "operator+");
  return {x.space_ptr(), x.matrix() + y.matrix(), sum_parity(x.parity(), y.parity())};
}

GradedOperator operator-(const GradedOperator& x, const GradedOperator& y) {
  require_same_space(x, y, "operator-");
  return {x.space_ptr(), x.matrix() - y.matrix(), sum_parity(x.parity(), y.parity())};
}

GradedOperator operator-(const GradedOperator& x) { return x.with_matrix(-x.matrix()); }

GradedOperator operator*(const GradedOperator& x, const GradedOperator& y) {
  require_same_space(x, y, "operator*");
  return {x.space_ptr(), x.matrix() * y.matrix(), product_parity(x.parity(), y.parity())};
}

GradedOperator operator*(cplx s, const GradedOperator& x) { return x.with_matrix(s * x.matrix()); }

GradedOperator identity_on(const SpacePtr& space) {
  return {space, CMatrix::Identity(space->dim(), space->dim()), Parity::even};
}

GradedOperator zero_on(const SpacePtr& space) {
  return {space, CMatrix::Zero(space->dim(), space->dim()), Parity::even};
}

GradedOperator adjoint(const GradedOperator& x) { return x.with_matrix(x.matrix().adjoint()); }

GradedOperator real_part(const GradedOperator& d) { return d.with_matrix(real_part_of(d.matrix())); }

GradedOperator imag_part(const GradedOperator& d) { return d.with_matrix(imag_part_of(d.matrix())); }

GradedOperator commutator(const GradedOperator& x, const GradedOperator& y) {
  require_same_space(x, y, "commutator");
  return {x.space_ptr(), x.matrix() * y.matrix() - y.matrix() * x.matrix(),
          product_parity(x.parity(), y.parity())};
}

GradedOperator anticommutator(const GradedOperator& x, const GradedOperator& y) {
  require_same_space(x, y, "anticommutator");
  return {x.space_ptr(), x.matrix() * y.matrix() + y.matrix() * x.matrix(),
          product_parity(x.parity(), y.parity())};
}

namespace {

double graded_sign(const GradedOperator& x, const GradedOperator& y, std::string_view what) {
  if (x.parity() == Parity::none || y.parity() == Parity::none) {
    throw ParityError(std::string(what) + " needs homogeneous operands; use commutator()");
  }
  return (x.parity() == Parity::odd && y.parity() == Parity::odd) ? -1.0 : 1.0;
}

}  // namespace

GradedOperator graded_commutator(const GradedOperator& x, const GradedOperator& y) {
  require_same_space(x, y, "graded_commutator");
  const double s = graded_sign(x, y, "graded_commutator");
  return {x.space_ptr(), x.matrix() * y.matrix() - s * (y.matrix() * x.matrix()),
          product_parity(x.parity(), y.parity())};
}

GradedOperator graded_anticommutator(const GradedOperator& x, const GradedOperator& y) {
  require_same_space(x, y, "graded_anticommutator");
  const double s = graded_sign(x, y, "graded_anticommutator");
  return {x.space_ptr(), x.matrix() * y.matrix() + s * (y.matrix() * x.matrix()),
          product_parity(x.parity(), y.parity())};
}

GraphInnerProduct::GraphInnerProduct(GradedOperator s, GradedOperator t)
    : s_(std::move(s)), t_(std::move(t)) {
  require_same_space(s_, t_, "GraphInnerProduct");
}

cplx GraphInnerProduct::operator()(const CVector& phi, const CVector& psi) const {
  const Index n = s_.dim();
  if (phi.size() != n || psi.size() != n) {
    throw DimensionMismatch("graph_inner: vectors must have dimension " + std::to_string(n));
  }
  const CVector sphi = s_.matrix() * phi;
  const CVector spsi = s_.matrix() * psi;
  const CVector tphi = t_.matrix() * phi;
  const CVector tpsi = t_.matrix() * psi;
  return phi.dot(psi) + sphi.dot(spsi) + tphi.dot(tpsi);
}

CMatrix GraphInnerProduct::gram(const CMatrix& basis) const {
  if (basis.rows() != s_.dim()) throw DimensionMismatch("graph_inner: basis has wrong row count");
  const CMatrix sb = s_.matrix() * basis;
  const CMatrix tb = t_.matrix() * basis;
  return basis.adjoint() * basis + sb.adjoint() * sb + tb.adjoint() * tb;
}

cplx graph_inner(const GradedOperator& s, const GradedOperator& t, const CVector& phi,
                 const CVector& psi) {
  return GraphInnerProduct(s, t)(phi, psi);
}

double operator_norm(const CMatrix& x) {
  if (x.size() == 0) return 0.0;
  // Work with the smaller of X*X and XX*.
  const CMatrix gram = x.rows() >= x.cols() ? CMatrix(x.adjoint() * x) : CMatrix(x * x.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double operator_norm(const GradedOperator& x) { return operator_norm(x.matrix()); }

double hermitian_residual(const CMatrix& x) { return (x - x.adjoint()).norm(); }

double hermitian_residual(const GradedOperator& x) { return hermitian_residual(x.matrix()); }

double hermitian_residual(const SparseCMatrix& x) {
  const SparseCMatrix adj = x.adjoint();
  return SparseCMatrix(x - adj).norm();
}

double residual(const CMatrix& x, const CMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw DimensionMismatch("residual: shape mismatch");
  return (x - y).norm();
}

double residual(const GradedOperator& x, const GradedOperator& y) { return residual(x.matrix(), y.matrix()); }

double residual(const SparseCMatrix& x, const SparseCMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw DimensionMismatch("residual: shape mismatch");
  return SparseCMatrix(x - y).norm();
}

void require_hermitian(const CMatrix& x, std::string_view what, double tol) {
  if (x.rows() != x.cols()) throw DimensionMismatch(std::string(what) + ": matrix is not square");
  const double r = hermitian_residual(x);
  if (r > tol * scale_of(x)) {
    throw NotHermitian(std::string(what) + ": operator is not Hermitian (residual " + std::to_string(r) +
                       ")");
  }
}

void require_hermitian(const GradedOperator& x, std::string_view what, double tol) {
  require_hermitian(x.matrix(), what, tol);
}

Eigen::VectorXd hermitian_eigenvalues(const CMatrix& x) {
  if (x.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<CMatrix> es(x, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) { return Eigen::kroneckerProduct(a, b).eval(); }

SparseCMatrix kron(const SparseCMatrix& a, const SparseCMatrix& b) {
  SparseCMatrix out = Eigen::kroneckerProduct(a, b);
  return out;
}

}  // namespace wick
