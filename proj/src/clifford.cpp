#include "wick/clifford.hpp"

#include <algorithm>
#include <cmath>

namespace wick {

namespace {

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

// Z ⊗ … ⊗ Z ⊗ P ⊗ 1 ⊗ … ⊗ 1 on k qubits, with P in slot `slot`.
CMatrix jordan_wigner(int k, int slot, const CMatrix& p) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (int q = 0; q < k; ++q) {
    const CMatrix factor = q < slot ? pauli_z() : (q == slot ? p : CMatrix(CMatrix::Identity(2, 2)));
    out = kron(out, factor);
  }
  return out;
}

// Hermitian, pairwise anti-commuting, squaring to 1.
std::vector<CMatrix> euclidean_generators(int n) {
  const int k = n / 2;
  std::vector<CMatrix> g;
  for (int q = 0; q < k; ++q) {
    g.push_back(jordan_wigner(k, q, pauli_x()));
    g.push_back(jordan_wigner(k, q, pauli_y()));
  }
  if (n % 2 == 1) {
    CMatrix chirality = CMatrix::Identity(1, 1);
    for (int q = 0; q < k; ++q) chirality = kron(chirality, pauli_z());
    g.push_back(chirality);
  }
  return g;
}

cplx i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

CMatrix ordered_product(const std::vector<CMatrix>& gens, int from, int to, Index dim) {
  CMatrix p = CMatrix::Identity(dim, dim);
  for (int j = from; j < to; ++j) p = p * gens[static_cast<std::size_t>(j)];
  return p;
}

// J_M and (for even n) Γ_M from the generators and the timelike count.
void attach_structure(CliffordRep& rep) {
  const int n = rep.n();
  const Index dim = rep.generators.front().rows();
  rep.fundamental_symmetry = i_power(rep.t * (rep.t - 1) / 2) * ordered_product(rep.generators, 0, rep.t, dim);
  if (n % 2 == 0) {
    rep.grading = i_power(-rep.t + n * (n + 1) / 2) * ordered_product(rep.generators, 0, n, dim);
  } else {
    rep.grading.reset();
  }
}

}  // namespace

double kappa(const CliffordRep& rep, int j) { return j < rep.t ? -1.0 : 1.0; }

CliffordRep build_clifford(int t, int s) {
  if (t < 0 || s < 0) throw InvalidArgument("build_clifford: negative signature");
  if (t + s == 0) throw InvalidArgument("build_clifford: t + s must be at least 1");
  CliffordRep rep;
  rep.t = t;
  rep.s = s;
  const auto euclid = euclidean_generators(t + s);
  for (int j = 0; j < t + s; ++j) {
    const CMatrix& g = euclid[static_cast<std::size_t>(j)];
    rep.generators.push_back(j < t ? g : CMatrix(kI * g));
  }
  attach_structure(rep);
  return rep;
}

CliffordRep wick_rotate_clifford(const CliffordRep& rep, WickSign sign) {
  const cplx factor = sign == WickSign::plus ? kI : -kI;
  CliffordRep out;
  out.t = 0;
  out.s = rep.n();
  for (int j = 0; j < rep.n(); ++j) {
    const CMatrix& g = rep.generators[static_cast<std::size_t>(j)];
    out.generators.push_back(j < rep.t ? CMatrix(factor * g) : g);
  }
  attach_structure(out);
  return out;
}

double rotated_grading_sign(int t, WickSign sign) {
  const double base = sign == WickSign::plus ? -1.0 : 1.0;
  return t % 2 == 0 ? 1.0 : base;
}

CMatrix krein_adjoint(const CliffordRep& rep, const CMatrix& x) {
  const CMatrix& j = rep.fundamental_symmetry;
  if (x.rows() != j.rows() || x.cols() != j.cols()) {
    throw DimensionMismatch("krein_adjoint: operator does not act on the spinor space");
  }
  return j * x.adjoint() * j;
}

GradedOperator krein_adjoint(const CliffordRep& rep, const GradedOperator& x) {
  return x.with_matrix(krein_adjoint(rep, x.matrix()));
}

double clifford_relation_residual(const CliffordRep& rep) {
  const Index dim = rep.dim();
  const CMatrix id = CMatrix::Identity(dim, dim);
  double worst = 0.0;
  for (int i = 0; i < rep.n(); ++i) {
    for (int j = i; j < rep.n(); ++j) {
      const CMatrix& a = rep.generators[static_cast<std::size_t>(i)];
      const CMatrix& b = rep.generators[static_cast<std::size_t>(j)];
      CMatrix r = a * b + b * a;
      if (i == j) r += 2.0 * kappa(rep, j) * id;
      worst = std::max(worst, r.norm());
    }
  }
  return worst;
}

double fundamental_symmetry_residual(const CliffordRep& rep) {
  const CMatrix& j = rep.fundamental_symmetry;
  const CMatrix id = CMatrix::Identity(j.rows(), j.cols());
  return std::max(hermitian_residual(j), residual(CMatrix(j * j), id));
}

double reflection_residual(const CliffordRep& rep) {
  const CMatrix& jm = rep.fundamental_symmetry;
  const double sign = rep.t % 2 == 0 ? 1.0 : -1.0;
  double worst = 0.0;
  for (int k = 0; k < rep.n(); ++k) {
    const CMatrix& g = rep.generators[static_cast<std::size_t>(k)];
    const CMatrix reflected = k < rep.t ? CMatrix(-g) : g;
    worst = std::max(worst, residual(CMatrix(jm * g * jm), CMatrix(sign * reflected)));
  }
  return worst;
}

double grading_residual(const CliffordRep& rep) {
  if (!rep.grading) return 0.0;
  const CMatrix& g = *rep.grading;
  const CMatrix id = CMatrix::Identity(g.rows(), g.cols());
  double worst = std::max(hermitian_residual(g), residual(CMatrix(g * g), id));
  for (const auto& gen : rep.generators) worst = std::max(worst, CMatrix(g * gen + gen * g).norm());
  return worst;
}

}  // namespace wick
