#include "doctest.h"

#include "wick/oscillator.hpp"
#include "wick/random.hpp"
#include "wick/rotations.hpp"

using namespace wick;

namespace {

CMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

CMatrix blocks(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d) {
  CMatrix m(2 * a.rows(), 2 * a.rows());
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("Wick rotation of (1+i)E12 matches the hand calculation") {
  const GradedOperator d(trivial_space(2), mat2(0, cplx(1, 1), 0, 0));
  const WickPair w = wick_rotate(d);
  CHECK(residual(w.d_plus.matrix(), mat2(0, 1, 1, 0)) <= kExactTol);
  CHECK(residual(w.d_minus.matrix(), mat2(0, kI, -kI, 0)) <= kExactTol);
}

TEST_CASE("Wick rotation special cases") {
  RandomSource rng(1);
  const SpacePtr e = trivial_space(12);
  const GradedOperator s(e, rng.hermitian(12));

  const WickPair h = wick_rotate(s);
  CHECK(residual(h.d_plus, s) <= kExactTol);
  CHECK(residual(h.d_minus, s) <= kExactTol);

  // (1+i)S rotates to (2S, 0).
  const WickPair w = wick_rotate(cplx(1, 1) * s);
  CHECK(residual(w.d_plus.matrix(), 2.0 * s.matrix()) <= kExactTol);
  CHECK(w.d_minus.matrix().norm() <= kExactTol);

  CHECK(residual(reverse_wick(s, s), s) <= kExactTol);
}

TEST_CASE("Wick pair is Hermitian and sums to D + D*") {
  RandomSource rng(2);
  const GradedOperator d(trivial_space(40), rng.matrix(40));
  const WickPair w = wick_rotate(d);
  CHECK(hermitian_residual(w.d_plus) <= kExactTol);
  CHECK(hermitian_residual(w.d_minus) <= kExactTol);
  CHECK(residual(w.d_plus + w.d_minus, d + adjoint(d)) <= kExactTol);
}

TEST_CASE("round trip in both directions") {
  RandomSource rng(3);
  for (Index n : {2, 8, 64, 256}) {
    const SpacePtr e = trivial_space(n);
    const GradedOperator d(e, rng.matrix(n));
    const WickPair w = wick_rotate(d);
    CHECK(residual(reverse_wick(w.d_plus, w.d_minus), d) <= kExactTol);

    const GradedOperator d1(e, rng.hermitian(n));
    const GradedOperator d2(e, rng.hermitian(n));
    const WickPair back = wick_rotate(reverse_wick(d1, d2));
    CHECK(residual(back.d_plus, d1) <= kExactTol);
    CHECK(residual(back.d_minus, d2) <= kExactTol);
  }
}

TEST_CASE("reverse Wick rotation: parts, swap and rejection") {
  RandomSource rng(4);
  const SpacePtr e = trivial_space(16);
  const GradedOperator d1(e, rng.hermitian(16));
  const GradedOperator d2(e, rng.hermitian(16));
  const GradedOperator d = reverse_wick(d1, d2);
  CHECK(residual(real_part(d).matrix(), 0.5 * (d1.matrix() + d2.matrix())) <= kExactTol);
  CHECK(residual(imag_part(d).matrix(), 0.5 * (d1.matrix() - d2.matrix())) <= kExactTol);
  CHECK(residual(reverse_wick(d2, d1), adjoint(d)) <= kExactTol);

  const GradedOperator bad(e, rng.matrix(16));
  CHECK_THROWS_AS(reverse_wick(bad, d2), NotHermitian);
  CHECK_THROWS_AS(reverse_wick(d1, GradedOperator(trivial_space(4), rng.hermitian(4))), DimensionMismatch);
}

TEST_CASE("matrix-level rotation works for sparse storage") {
  RandomSource rng(5);
  const CMatrix dense = rng.matrix(10);
  const SparseCMatrix sparse = dense.sparseView();
  const auto [p, m] = wick_rotate_matrix(sparse);
  const SparseCMatrix back = reverse_wick_matrix(p, m);
  CHECK(residual(CMatrix(back), dense) <= kExactTol);
}

TEST_CASE("swap law and unitary invariance") {
  RandomSource rng(6);
  const SpacePtr e = trivial_space(24);
  const GradedOperator d(e, rng.matrix(24));
  const WickPair w = wick_rotate(d);
  const WickPair ws = wick_rotate(adjoint(d));
  CHECK(residual(ws.d_plus, w.d_minus) <= kExactTol);
  CHECK(residual(ws.d_minus, w.d_plus) <= kExactTol);

  const CMatrix u = rng.unitary(24);
  const WickPair wu = wick_rotate(GradedOperator(e, u * d.matrix() * u.adjoint()));
  CHECK(residual(wu.d_plus.matrix(), CMatrix(u * w.d_plus.matrix() * u.adjoint())) <= kExactTol);
  CHECK(residual(wu.d_minus.matrix(), CMatrix(u * w.d_minus.matrix() * u.adjoint())) <= kExactTol);
}

TEST_CASE("commuting doubling") {
  RandomSource rng(7);
  SUBCASE("diagonal commuting pair gives anticommuting doubles") {
    const SpacePtr e = trivial_space(6);
    Eigen::VectorXd a = Eigen::VectorXd::Random(6), b = Eigen::VectorXd::Random(6);
    const GradedOperator s(e, a.cast<cplx>().asDiagonal());
    const GradedOperator t(e, b.cast<cplx>().asDiagonal());
    const CommutingDoubling dbl = double_commuting(s, t);
    CHECK(anticommutator(dbl.s.op, dbl.t.op).matrix().norm() <= kExactTol);
  }
  SUBCASE("anticommuting Pauli pair gives commuting doubles") {
    const SpacePtr e = trivial_space(2);
    const CommutingDoubling dbl =
        double_commuting(GradedOperator(e, mat2(0, 1, 1, 0)), GradedOperator(e, mat2(0, -kI, kI, 0)));
    CHECK(commutator(dbl.s.op, dbl.t.op).matrix().norm() <= kExactTol);
  }
  SUBCASE("block identities on random Hermitian pairs") {
    const SpacePtr e = trivial_space(16);
    const GradedOperator s(e, rng.hermitian(16));
    const GradedOperator t(e, rng.hermitian(16));
    const CommutingDoubling dbl = double_commuting(s, t);
    CHECK(hermitian_residual(dbl.s.op) <= kExactTol);
    CHECK(hermitian_residual(dbl.t.op) <= kExactTol);
    CHECK(residual(dbl.s.block(0, 1), CMatrix(kI * s.matrix())) == 0.0);
    CHECK(dbl.s.block_labels[1] == "iS");

    const CMatrix c = commutator(s, t).matrix();
    const CMatrix a = anticommutator(s, t).matrix();
    const CMatrix z = CMatrix::Zero(16, 16);
    CHECK(residual(anticommutator(dbl.s.op, dbl.t.op).matrix(), CMatrix(kI * blocks(c, z, z, -c))) <= kExactTol);
    CHECK(residual(commutator(dbl.s.op, dbl.t.op).matrix(), CMatrix(kI * blocks(a, z, z, -a))) <= kExactTol);
  }
  SUBCASE("non-Hermitian input is rejected") {
    const SpacePtr e = trivial_space(4);
    CHECK_THROWS_AS(double_commuting(GradedOperator(e, rng.matrix(4)), GradedOperator(e, rng.hermitian(4))),
                    NotHermitian);
  }
}

TEST_CASE("resolvent of the doubled operator factorises") {
  RandomSource rng(8);
  for (Index n : {4, 16, 64}) {
    const CMatrix s = rng.hermitian(n);
    for (double mu : {-4.0, -2.0, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0, 2.0, 4.0}) {
      const ResolventFactors f = doubled_resolvent_factors(s, mu);
      const CMatrix direct = doubled_resolvent(s, mu);
      CHECK(residual(CMatrix(f.left * f.right), direct) <= kTruncationTol);
      // Independent inverse: full-pivot LU of S̃ − iμ assembled here.
      const CMatrix z = CMatrix::Zero(n, n);
      CMatrix shifted = blocks(z, kI * s, -kI * s, z);
      shifted -= kI * mu * CMatrix::Identity(2 * n, 2 * n);
      CHECK(residual(direct, CMatrix(shifted.fullPivLu().inverse())) <= kTruncationTol);
    }
  }
}

TEST_CASE("odd to even doubling") {
  RandomSource rng(9);
  SUBCASE("random operator") {
    const GradedOperator d(trivial_space(32), rng.matrix(32));
    const OddEvenDoubling dbl = double_odd_to_even(d);
    for (const DoubledOperator* x : {&dbl.d, &dbl.d_plus, &dbl.d_minus}) {
      CHECK(x->op.parity() == Parity::odd);
      CHECK(x->op.parity_residual() == 0.0);
    }
    CHECK(hermitian_residual(dbl.d_plus.op) <= kExactTol);
    CHECK(hermitian_residual(dbl.d_minus.op) <= kExactTol);
    CHECK(residual(reverse_wick(dbl.d_plus.op, dbl.d_minus.op), dbl.d.op) <= kExactTol);
    CMatrix gamma = CMatrix::Identity(64, 64);
    gamma.bottomRightCorner(32, 32) *= -1.0;
    CHECK(residual(dbl.d.op.space().grading(), gamma) == 0.0);
  }
  SUBCASE("Hermitian operator doubles symmetrically") {
    const CMatrix h = rng.hermitian(8);
    const OddEvenDoubling dbl = double_odd_to_even(GradedOperator(trivial_space(8), h));
    const CMatrix z = CMatrix::Zero(8, 8);
    CHECK(residual(dbl.d_plus.op.matrix(), blocks(z, h, h, z)) <= kExactTol);
    CHECK(residual(dbl.d_minus.op.matrix(), blocks(z, h, h, z)) <= kExactTol);
  }
  SUBCASE("oscillator annihilator") {
    const CMatrix a(single_mode_annihilator(8, 1.0));
    const OddEvenDoubling dbl = double_odd_to_even(GradedOperator(trivial_space(8), a));
    const CMatrix z = CMatrix::Zero(8, 8);
    CHECK(residual(dbl.d_plus.op.matrix(), blocks(z, a.adjoint(), a, z)) == 0.0);
    CHECK(residual(dbl.d_minus.op.matrix(), blocks(z, a, a.adjoint(), z)) == 0.0);
  }
  SUBCASE("graded input is rejected") {
    Eigen::VectorXd signs(2);
    signs << 1, -1;
    CHECK_THROWS_AS(double_odd_to_even(GradedOperator(diagonal_space(signs), mat2(0, 1, 1, 0))), InvalidArgument);
  }
}

TEST_CASE("opposite-module unitary equivalence") {
  const CMatrix w = opposite_unitary(1);
  CHECK(residual(w, mat2(0, -1, 1, 0)) == 0.0);
  // W diag(1, −1) W* = diag(−1, 1).
  CHECK(residual(CMatrix(w * mat2(1, 0, 0, -1) * w.adjoint()), mat2(-1, 0, 0, 1)) == 0.0);

  const CMatrix a(single_mode_annihilator(8, 1.0));
  const CheckReport r = opposite_equivalence_check(GradedOperator(trivial_space(8), a));
  CHECK(r.passed);
  CHECK(r.residual <= kExactTol);
  CHECK(r.components.size() == 4);

  // Block-multiplication oracle for W D̃₊ W*: [[0,−1],[1,0]]·[[0,a*],[a,0]]·[[0,1],[−1,0]].
  const CMatrix z = CMatrix::Zero(8, 8);
  const CMatrix w8 = opposite_unitary(8);
  const CMatrix lhs = w8 * blocks(z, a.adjoint(), a, z) * w8.adjoint();
  CHECK(residual(lhs, CMatrix(-blocks(z, a, a.adjoint(), z))) == 0.0);

  const CheckReport zero = opposite_equivalence_check(GradedOperator(trivial_space(5), CMatrix::Zero(5, 5)));
  CHECK(zero.passed);
  CHECK(zero.residual == 0.0);
}
