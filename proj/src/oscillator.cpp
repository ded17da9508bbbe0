#include "wick/oscillator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace wick {

namespace {

using Triplet = Eigen::Triplet<cplx>;

SparseCMatrix sparse_identity(Index n) {
  SparseCMatrix id(n, n);
  id.setIdentity();
  return id;
}

SparseCMatrix from_diagonal(const Eigen::VectorXd& diag) {
  std::vector<Triplet> t;
  for (Index i = 0; i < diag.size(); ++i)
    if (diag(i) != 0.0) t.emplace_back(i, i, diag(i));
  SparseCMatrix m(diag.size(), diag.size());
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

Index int_pow(Index base, int exp) {
  Index r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// a acting on mode μ of N^d, mode 0 most significant.
SparseCMatrix embed_mode(const SparseCMatrix& op, int mu, int d, Index n) {
  SparseCMatrix out = sparse_identity(1);
  for (int q = 0; q < d; ++q) out = kron(out, q == mu ? op : sparse_identity(n));
  return out;
}

SparseCMatrix adjoint_of(const SparseCMatrix& x) { return SparseCMatrix(x.adjoint()); }

}  // namespace

SparseCMatrix single_mode_annihilator(int N, double omega) {
  std::vector<Triplet> t;
  for (int n = 1; n < N; ++n) t.emplace_back(n - 1, n, std::sqrt(2.0 * omega * n));
  SparseCMatrix a(N, N);
  a.setFromTriplets(t.begin(), t.end());
  return a;
}

std::vector<SparseCMatrix> fermion_annihilators(int d) {
  if (d < 1) throw InvalidArgument("fermion_annihilators: d must be at least 1");
  SparseCMatrix lower(2, 2), z(2, 2);
  lower.insert(0, 1) = 1.0;
  z.insert(0, 0) = 1.0;
  z.insert(1, 1) = -1.0;
  std::vector<SparseCMatrix> out;
  for (int mu = 0; mu < d; ++mu) {
    SparseCMatrix b = sparse_identity(1);
    for (int q = 0; q < d; ++q) b = kron(b, q < mu ? z : (q == mu ? lower : sparse_identity(2)));
    out.push_back(b);
  }
  return out;
}

FockModel build_fock_model(int d, int N, double omega, int margin) {
  if (d < 1) throw InvalidArgument("build_fock_model: d must be at least 1");
  if (N < 4) throw InvalidArgument("build_fock_model: N must be at least 4");
  if (!(omega > 0.0)) throw InvalidArgument("build_fock_model: omega must be positive");
  if (margin < 1) throw InvalidArgument("build_fock_model: margin must be at least 1");
  if (margin >= N) throw InvalidArgument("build_fock_model: margin must be below the cutoff N");

  FockModel m;
  m.d = d;
  m.N = N;
  m.omega = omega;
  m.margin = margin;
  m.boson_dim = int_pow(N, d);
  m.fermion_dim = int_pow(2, d);
  m.dim = m.boson_dim * m.fermion_dim;

  const SparseCMatrix a1 = single_mode_annihilator(N, omega);
  const SparseCMatrix id_b = sparse_identity(m.boson_dim);
  const SparseCMatrix id_f = sparse_identity(m.fermion_dim);
  for (int mu = 0; mu < d; ++mu) m.a.push_back(kron(embed_mode(a1, mu, d, N), id_f));
  for (const auto& b : fermion_annihilators(d)) m.b.push_back(kron(id_b, b));

  m.grading_signs.resize(m.dim);
  m.occupations.resize(static_cast<std::size_t>(m.dim));
  m.fermion_number.resize(static_cast<std::size_t>(m.dim));
  for (Index i = 0; i < m.dim; ++i) {
    const auto f = static_cast<unsigned>(i % m.fermion_dim);
    Index rest = i / m.fermion_dim;
    std::vector<int> occ(static_cast<std::size_t>(d));
    for (int mu = d - 1; mu >= 0; --mu) {
      occ[static_cast<std::size_t>(mu)] = static_cast<int>(rest % N);
      rest /= N;
    }
    const int nf = std::popcount(f);
    m.occupations[static_cast<std::size_t>(i)] = std::move(occ);
    m.fermion_number[static_cast<std::size_t>(i)] = nf;
    m.grading_signs(i) = nf % 2 == 0 ? 1.0 : -1.0;
  }
  return m;
}

OscillatorPair build_D1_D2(const FockModel& model) {
  SparseCMatrix d1(model.dim, model.dim), d2(model.dim, model.dim);
  for (int mu = 0; mu < model.d; ++mu) {
    const SparseCMatrix& a = model.a[static_cast<std::size_t>(mu)];
    const SparseCMatrix& b = model.b[static_cast<std::size_t>(mu)];
    const SparseCMatrix as = adjoint_of(a);
    const SparseCMatrix bs = adjoint_of(b);
    d1 += SparseCMatrix(a * bs) + SparseCMatrix(as * b);
    d2 += SparseCMatrix(a * b) + SparseCMatrix(as * bs);
  }
  d1.prune(cplx(0.0));
  d2.prune(cplx(0.0));
  return {d1, d2};
}

SparseCMatrix oscillator_indefinite(const FockModel& model) {
  const auto [d1, d2] = build_D1_D2(model);
  return SparseCMatrix(cplx(0.5, 0.5) * d1 + cplx(0.5, -0.5) * d2);
}

SparseCMatrix hamiltonian(const FockModel& model) {
  SparseCMatrix h = model.d * model.omega * sparse_identity(model.dim);
  for (const auto& a : model.a) h += SparseCMatrix(adjoint_of(a) * a);
  return h;
}

SparseCMatrix fermion_sigma(const FockModel& model) {
  SparseCMatrix s(model.dim, model.dim);
  for (const auto& b : model.b) {
    const SparseCMatrix bs = adjoint_of(b);
    s += SparseCMatrix(bs * b) - SparseCMatrix(b * bs);
  }
  return s;
}

SparseCMatrix position(const FockModel& model, int mu) {
  const SparseCMatrix& a = model.a.at(static_cast<std::size_t>(mu));
  return SparseCMatrix((1.0 / (2.0 * model.omega)) * (a + adjoint_of(a)));
}

SparseCMatrix derivative(const FockModel& model, int mu) {
  const SparseCMatrix& a = model.a.at(static_cast<std::size_t>(mu));
  return SparseCMatrix(0.5 * (a - adjoint_of(a)));
}

SparseCMatrix grading(const FockModel& model) { return from_diagonal(model.grading_signs); }

SparseCMatrix interior_projector(const FockModel& model) {
  const int top = model.N - 1 - model.margin;
  Eigen::VectorXd diag(model.dim);
  for (Index i = 0; i < model.dim; ++i) {
    const auto& occ = model.occupations[static_cast<std::size_t>(i)];
    diag(i) = std::all_of(occ.begin(), occ.end(), [top](int n) { return n <= top; }) ? 1.0 : 0.0;
  }
  return from_diagonal(diag);
}

Index interior_rank(const FockModel& model) { return interior_projector(model).nonZeros(); }

double interior_residual(const SparseCMatrix& p, const SparseCMatrix& x, const SparseCMatrix& y) {
  const SparseCMatrix diff = x - y;
  return SparseCMatrix(p * diff * p).norm();
}

std::vector<int> excitation_sectors(const FockModel& model) {
  std::vector<int> k(static_cast<std::size_t>(model.dim));
  for (std::size_t i = 0; i < k.size(); ++i) {
    const auto& occ = model.occupations[i];
    k[i] = std::accumulate(occ.begin(), occ.end(), 0) + model.fermion_number[i];
  }
  return k;
}

SectorSpectrum sector_eigenvalues(const SparseCMatrix& x, const std::vector<int>& labels,
                                  const std::vector<bool>& keep) {
  const auto n = static_cast<std::size_t>(x.rows());
  if (labels.size() != n || keep.size() != n || x.rows() != x.cols()) {
    throw DimensionMismatch("sector_eigenvalues: labels and matrix disagree");
  }
  std::map<int, std::vector<Index>> groups;
  std::vector<Index> position(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!keep[i]) continue;
    auto& g = groups[labels[i]];
    position[i] = static_cast<Index>(g.size());
    g.push_back(static_cast<Index>(i));
  }
  std::map<int, CMatrix> blocks;
  for (const auto& [label, idx] : groups) {
    const auto k = static_cast<Index>(idx.size());
    blocks[label] = CMatrix::Zero(k, k);
  }
  double leak2 = 0.0;
  for (Index c = 0; c < x.outerSize(); ++c) {
    for (SparseCMatrix::InnerIterator it(x, c); it; ++it) {
      const auto r = static_cast<std::size_t>(it.row());
      const auto cc = static_cast<std::size_t>(it.col());
      if (!keep[r] || !keep[cc]) continue;
      if (labels[r] != labels[cc]) {
        leak2 += std::norm(it.value());
        continue;
      }
      blocks[labels[r]](position[r], position[cc]) = it.value();
    }
  }

  std::vector<std::pair<double, int>> all;
  for (const auto& [label, block] : blocks) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(block, Eigen::EigenvaluesOnly);
    for (Index i = 0; i < es.eigenvalues().size(); ++i) all.emplace_back(es.eigenvalues()(i), label);
  }
  std::sort(all.begin(), all.end());
  SectorSpectrum out;
  out.eigenvalues.resize(static_cast<Index>(all.size()));
  for (std::size_t i = 0; i < all.size(); ++i) {
    out.eigenvalues(static_cast<Index>(i)) = all[i].first;
    out.sectors.push_back(all[i].second);
  }
  out.leakage = std::sqrt(leak2);
  return out;
}

SectorSpectrum interior_D1_squared_spectrum(const FockModel& model) {
  const SparseCMatrix d1 = build_D1_D2(model).d1;
  const SparseCMatrix sq = d1 * d1;
  const SparseCMatrix p = interior_projector(model);
  std::vector<bool> keep(static_cast<std::size_t>(model.dim));
  for (Index i = 0; i < model.dim; ++i) keep[static_cast<std::size_t>(i)] = p.coeff(i, i) != cplx(0.0);
  return sector_eigenvalues(sq, excitation_sectors(model), keep);
}

Eigen::VectorXd interior_ladder(const FockModel& model) {
  const int top = model.N - 1 - model.margin;
  std::vector<double> values;
  for (Index i = 0; i < model.dim; ++i) {
    const auto& occ = model.occupations[static_cast<std::size_t>(i)];
    if (!std::all_of(occ.begin(), occ.end(), [top](int n) { return n <= top; })) continue;
    const int k = std::accumulate(occ.begin(), occ.end(), 0) + model.fermion_number[static_cast<std::size_t>(i)];
    values.push_back(2.0 * model.omega * k);
  }
  std::sort(values.begin(), values.end());
  return Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Index>(values.size()));
}

SparseCMatrix fermion_major(const FockModel& model, const SparseCMatrix& x) {
  std::vector<Triplet> t;
  for (Index i = 0; i < model.dim; ++i) {
    const Index bidx = i / model.fermion_dim;
    const Index fidx = i % model.fermion_dim;
    t.emplace_back(fidx * model.boson_dim + bidx, i, 1.0);
  }
  SparseCMatrix q(model.dim, model.dim);
  q.setFromTriplets(t.begin(), t.end());
  return SparseCMatrix(q * x * adjoint_of(q));
}

GradedOperator to_graded(const FockModel& model, const SparseCMatrix& x, Parity parity) {
  if (model.dim > kMaxDenseDim) {
    throw InvalidArgument("to_graded: dimension " + std::to_string(model.dim) + " exceeds the dense limit");
  }
  return {diagonal_space(model.grading_signs), CMatrix(x), parity};
}

}  // namespace wick
