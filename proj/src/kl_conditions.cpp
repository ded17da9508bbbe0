#include "wick/kl_conditions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/connected_components.hpp>

#include "wick/matrix_io.hpp"

namespace wick {

std::string_view to_string(BracketMode m) {
  return m == BracketMode::commuting ? "commuting" : "anticommuting";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::bounded:
      return "bounded";
    case Verdict::growing:
      return "growing";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::vector<double> default_mu_grid() { return {-4.0, -2.0, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0, 2.0, 4.0}; }

double resolvent_term(const CMatrix& s, const CMatrix& t, BracketMode mode, double mu) {
  if (mu == 0.0) throw InvalidArgument("resolvent_term: mu must be nonzero");
  const CMatrix st = s * t;
  const CMatrix ts = t * s;
  const CMatrix bracket = mode == BracketMode::commuting ? CMatrix(st - ts) : CMatrix(st + ts);
  CMatrix shifted = s;
  shifted.diagonal().array() -= kI * mu;
  // bracket·(S − iμ)⁻¹ = ((S − iμ)^{-*} bracket*)*, solved without forming the inverse.
  const CMatrix x = shifted.adjoint().partialPivLu().solve(bracket.adjoint());
  return operator_norm(CMatrix(x.adjoint()));
}

double resolvent_bound(const CMatrix& s, const CMatrix& t, BracketMode mode, const std::vector<double>& mu_grid) {
  if (mu_grid.empty()) throw InvalidArgument("resolvent_bound: empty mu grid");
  double best = 0.0;
  for (double mu : mu_grid) best = std::max(best, resolvent_term(s, t, mode, mu));
  return best;
}

double resolvent_bound(const ConditionProbe& probe, double tol) {
  require_same_space(probe.s, probe.t, "resolvent_bound");
  require_hermitian(probe.s, "resolvent_bound: S", tol);
  require_hermitian(probe.t, "resolvent_bound: T", tol);
  return resolvent_bound(probe.s.matrix(), probe.t.matrix(), probe.mode, probe.mu_grid);
}

CMatrix abs_plus_one_inverse(const CMatrix& b) {
  const Index n = b.rows();
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < j; ++i)
      if (b(i, j) != cplx(0.0) || b(j, i) != cplx(0.0)) boost::add_edge(i, j, g);
  std::vector<int> component(static_cast<std::size_t>(n));
  const int count = boost::connected_components(g, component.data());

  std::vector<std::vector<Index>> members(static_cast<std::size_t>(count));
  for (Index i = 0; i < n; ++i) members[static_cast<std::size_t>(component[static_cast<std::size_t>(i)])].push_back(i);

  CMatrix out = CMatrix::Zero(n, n);
  for (const auto& idx : members) {
    const Index k = static_cast<Index>(idx.size());
    CMatrix sub(k, k);
    for (Index c = 0; c < k; ++c)
      for (Index r = 0; r < k; ++r) sub(r, c) = b(idx[r], idx[c]);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(sub);
    const Eigen::VectorXd w = (es.eigenvalues().array().abs() + 1.0).inverse();
    const CMatrix f = es.eigenvectors() * w.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
    for (Index c = 0; c < k; ++c)
      for (Index r = 0; r < k; ++r) out(idx[r], idx[c]) = f(r, c);
  }
  return out;
}

double relative_bound(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("relative_bound: shape mismatch");
  require_hermitian(b, "relative_bound: B", tol);
  if (a.norm() == 0.0) return 0.0;
  return operator_norm(CMatrix(a * abs_plus_one_inverse(b)));
}

double relative_bound(const GradedOperator& a, const GradedOperator& b, double tol) {
  require_same_space(a, b, "relative_bound");
  return relative_bound(a.matrix(), b.matrix(), tol);
}

Verdict classify_sweep(const std::vector<double>& values) {
  if (values.empty()) return Verdict::inconclusive;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*hi <= kSweepZero) return Verdict::bounded;
  if (*lo > 0.0 && *hi / *lo <= 2.0) return Verdict::bounded;
  if (values.back() >= 3.0 * values.front()) return Verdict::growing;
  return Verdict::inconclusive;
}

BoundSweep refinement_sweep(const SweepBuilder& builder, const std::vector<int>& sizes) {
  if (sizes.size() < 3) throw InvalidArgument("refinement_sweep: need at least three sizes");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) throw InvalidArgument("refinement_sweep: sizes must be strictly increasing");
  }
  BoundSweep sweep;
  std::vector<double> values;
  for (int n : sizes) {
    const auto [a, b] = builder(n);
    const double rho = relative_bound(a, b);
    sweep.rows.emplace_back(n, rho);
    values.push_back(rho);
  }
  sweep.verdict = classify_sweep(values);
  return sweep;
}

std::string sweep_csv(const BoundSweep& sweep) {
  std::ostringstream out;
  out.precision(17);
  out << "size,rho,verdict\n";
  for (const auto& [n, rho] : sweep.rows) out << n << ',' << rho << ',' << to_string(sweep.verdict) << '\n';
  return out.str();
}

void write_sweep_csv(const BoundSweep& sweep, const std::filesystem::path& path) {
  io::write_file_atomically(path, sweep_csv(sweep));
}

}  // namespace wick
