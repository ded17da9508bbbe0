#include "wick/rotations.hpp"

namespace wick {

namespace {

CMatrix blocks(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d) {
  const Index n = a.rows();
  CMatrix m(2 * n, 2 * n);
  m << a, b, c, d;
  return m;
}

DoubledOperator make_doubled(const SpacePtr& space, CMatrix m, Parity parity, std::array<std::string, 4> labels) {
  const Index n = m.rows() / 2;
  return {n, GradedOperator(space, std::move(m), parity), std::move(labels)};
}

}  // namespace

CMatrix DoubledOperator::block(int row, int col) const {
  return op.matrix().block(row * base_dim, col * base_dim, base_dim, base_dim);
}

WickPair wick_rotate(const GradedOperator& d) {
  const GradedOperator re = real_part(d);
  const GradedOperator im = imag_part(d);
  return {re + im, re - im};
}

GradedOperator reverse_wick(const GradedOperator& d1, const GradedOperator& d2, double tol) {
  require_same_space(d1, d2, "reverse_wick");
  require_hermitian(d1, "reverse_wick: D1", tol);
  require_hermitian(d2, "reverse_wick: D2", tol);
  const Parity p = d1.parity() == d2.parity() ? d1.parity() : Parity::none;
  return {d1.space_ptr(), reverse_wick_matrix(d1.matrix(), d2.matrix()), p};
}

CommutingDoubling double_commuting(const GradedOperator& s, const GradedOperator& t, double tol) {
  require_same_space(s, t, "double_commuting");
  require_hermitian(s, "double_commuting: S", tol);
  require_hermitian(t, "double_commuting: T", tol);
  const Index n = s.dim();
  const CMatrix zero = CMatrix::Zero(n, n);
  const CMatrix& sm = s.matrix();
  const CMatrix& tm = t.matrix();
  const SpacePtr space = doubled_space(s.space());
  return {
      make_doubled(space, blocks(zero, kI * sm, -kI * sm, zero), Parity::none, {"0", "iS", "-iS", "0"}),
      make_doubled(space, blocks(zero, tm, tm, zero), Parity::none, {"0", "T", "T", "0"}),
  };
}

OddEvenDoubling double_odd_to_even(const GradedOperator& d) {
  if (!d.space().is_trivial()) {
    throw InvalidArgument("double_odd_to_even: operator must act on an ungraded space");
  }
  const Index n = d.dim();
  const CMatrix zero = CMatrix::Zero(n, n);
  const auto [dp, dm] = wick_rotate_matrix(d.matrix());
  const CMatrix dstar = d.matrix().adjoint();
  const SpacePtr space = doubled_space(d.space());
  return {
      make_doubled(space, blocks(zero, dp, dm, zero), Parity::odd, {"0", "D+", "D-", "0"}),
      make_doubled(space, blocks(zero, dstar, d.matrix(), zero), Parity::odd, {"0", "D*", "D", "0"}),
      make_doubled(space, blocks(zero, d.matrix(), dstar, zero), Parity::odd, {"0", "D", "D*", "0"}),
  };
}

CMatrix opposite_unitary(Index n) {
  const CMatrix id = CMatrix::Identity(n, n);
  const CMatrix zero = CMatrix::Zero(n, n);
  return blocks(zero, -id, id, zero);
}

CheckReport opposite_equivalence_check(const GradedOperator& d, double tol) {
  const OddEvenDoubling dbl = double_odd_to_even(d);
  const CMatrix w = opposite_unitary(d.dim());
  const CMatrix ws = w.adjoint();
  const CMatrix& gamma = dbl.d_plus.op.space().grading();
  const CMatrix id = CMatrix::Identity(w.rows(), w.cols());
  return make_report("opposite-equivalence", "W D+ W* = -D-, W G W* = -G",
                     {
                         {"W D+ W* + D-", residual(w * dbl.d_plus.op.matrix() * ws, -dbl.d_minus.op.matrix())},
                         {"W G W* + G", residual(w * gamma * ws, -gamma)},
                         {"W* + W", residual(ws, -w)},
                         {"W* W - 1", residual(ws * w, id)},
                     },
                     tol);
}

CMatrix doubled_resolvent(const CMatrix& s, double mu) {
  const Index n = s.rows();
  const CMatrix zero = CMatrix::Zero(n, n);
  CMatrix shifted = blocks(zero, kI * s, -kI * s, zero);
  shifted.diagonal().array() -= kI * mu;
  return shifted.partialPivLu().inverse();
}

ResolventFactors doubled_resolvent_factors(const CMatrix& s, double mu) {
  const Index n = s.rows();
  const CMatrix id = CMatrix::Identity(n, n);
  const CMatrix zero = CMatrix::Zero(n, n);
  const CMatrix minus_inv = (s - kI * mu * id).partialPivLu().inverse();
  const CMatrix r = (s + kI * mu * id).partialPivLu().inverse();
  const CMatrix sr = s * r;
  return {blocks(minus_inv, zero, zero, minus_inv), blocks(kI * mu * r, kI * sr, -kI * sr, kI * mu * r)};
}

}  // namespace wick
