#include "wick/random.hpp"

#include <cmath>

#include <Eigen/QR>

namespace wick {

cplx RandomSource::gaussian() {
  const double re = normal_(engine_);
  const double im = normal_(engine_);
  return {re, im};
}

CVector RandomSource::vector(Index n) {
  CVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = gaussian();
  return v;
}

CVector RandomSource::unit_vector(Index n) {
  CVector v = vector(n);
  return v / v.norm();
}

CMatrix RandomSource::matrix(Index n) {
  CMatrix m(n, n);
  const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(n));
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) m(i, j) = scale * gaussian();
  return m;
}

CMatrix RandomSource::hermitian(Index n) {
  const CMatrix m = matrix(n);
  return 0.5 * (m + m.adjoint());
}

CMatrix RandomSource::unitary(Index n) {
  const CMatrix m = matrix(n);
  Eigen::HouseholderQR<CMatrix> qr(m);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  // Fix the phase ambiguity so the distribution does not depend on QR conventions.
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

}  // namespace wick
