#include "wick/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace wick {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double parse_amplitude(const std::string& id, std::size_t prefix_len) {
  if (id.size() == prefix_len) return 0.5;
  if (id[prefix_len] != ':') throw InvalidArgument("unknown metric id '" + id + "'");
  try {
    return std::stod(id.substr(prefix_len + 1));
  } catch (const std::exception&) {
    throw InvalidArgument("bad amplitude in metric id '" + id + "'");
  }
}

bool starts_with_word(const std::string& id, const std::string& word) {
  return id.rfind(word, 0) == 0 && (id.size() == word.size() || id[word.size()] == ':');
}

}  // namespace

MetricFn parse_metric(const std::string& id, double period_t) {
  if (id == "flat") return [](double, double) { return 1.0; };
  if (starts_with_word(id, "constant")) {
    if (id.size() == 8) throw InvalidArgument("metric id 'constant' needs a value, e.g. constant:4");
    double c = 0.0;
    try {
      c = std::stod(id.substr(9));
    } catch (const std::exception&) {
      throw InvalidArgument("bad value in metric id '" + id + "'");
    }
    if (!(c > 0.0)) throw InvalidArgument("nonpositive metric in id '" + id + "'");
    return [c](double, double) { return c; };
  }
  if (starts_with_word(id, "breathing")) {
    const double a = parse_amplitude(id, 9);
    return [a, period_t](double, double t) {
      const double f = 1.0 + a * std::sin(kTwoPi * t / period_t);
      return f * f;
    };
  }
  if (starts_with_word(id, "ripple")) {
    const double a = parse_amplitude(id, 6);
    return [a](double theta, double) {
      const double f = 1.0 + a * std::sin(theta);
      return f * f;
    };
  }
  if (starts_with_word(id, "wave")) {
    const double a = parse_amplitude(id, 4);
    return [a, period_t](double theta, double t) {
      const double f = 1.0 + a * std::sin(theta) * std::sin(kTwoPi * t / period_t);
      return f * f;
    };
  }
  throw InvalidArgument("unknown metric id '" + id + "'");
}

CylinderModel build_cylinder(const CylinderConfig& config) {
  CylinderModel m;
  m.config = config;
  const MetricFn g = parse_metric(config.metric, config.l_t);
  const Eigen::VectorXd theta = lattice_points(config.n_theta, config.l_theta);
  const Eigen::VectorXd t = lattice_points(config.n_t, config.l_t);
  m.metric.resize(config.n_t, config.n_theta);
  for (int k = 0; k < config.n_t; ++k) {
    for (int j = 0; j < config.n_theta; ++j) {
      const double v = g(theta(j), t(k));
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw InvalidArgument("nonpositive metric sample " + std::to_string(v) + " for id '" + config.metric + "'");
      }
      m.metric(k, j) = v;
    }
  }
  m.d_theta = derivative_matrix(config.n_theta, config.l_theta, config.spin, config.stencil);
  m.d_t = derivative_matrix(config.n_t, config.l_t, SpinStructure::periodic, config.stencil);
  return m;
}

CMatrix build_circle_dirac(const Eigen::VectorXd& metric_slice, const CMatrix& d_theta) {
  if (metric_slice.size() != d_theta.rows()) throw DimensionMismatch("build_circle_dirac: metric slice size");
  if ((metric_slice.array() <= 0.0).any()) throw InvalidArgument("build_circle_dirac: nonpositive metric");
  const Eigen::VectorXcd f = metric_slice.array().rsqrt().cast<cplx>();
  const CMatrix fd = f.asDiagonal() * d_theta;
  const CMatrix df = d_theta * f.asDiagonal();
  return cplx(0.0, -0.5) * (fd + df);
}

CMatrix build_circle_dirac(const Eigen::VectorXd& metric_slice, int n_theta, double l_theta, SpinStructure spin,
                           Stencil stencil) {
  return build_circle_dirac(metric_slice, derivative_matrix(n_theta, l_theta, spin, stencil));
}

CMatrix build_family_operator(const CylinderModel& model) {
  const int nth = model.config.n_theta;
  const Index n = model.lattice_dim();
  CMatrix fam = CMatrix::Zero(n, n);
  for (int k = 0; k < model.config.n_t; ++k) {
    const Eigen::VectorXd slice = model.metric.row(k).transpose();
    fam.block(static_cast<Index>(k) * nth, static_cast<Index>(k) * nth, nth, nth) =
        build_circle_dirac(slice, model.d_theta);
  }
  return fam;
}

CMatrix build_time_operator(const CylinderModel& model) {
  const CMatrix id = CMatrix::Identity(model.config.n_theta, model.config.n_theta);
  return kron(CMatrix(-kI * model.d_t), id);
}

GradedOperator build_product_operator(const CylinderModel& model) {
  const CMatrix fam = build_family_operator(model);
  const CMatrix d2 = build_time_operator(model);
  const Index n = fam.rows();
  CMatrix m = CMatrix::Zero(2 * n, 2 * n);
  m.topRightCorner(n, n) = fam - kI * d2;
  m.bottomLeftCorner(n, n) = fam + kI * d2;
  return {doubled_space(GradedSpace(CMatrix::Identity(n, n))), std::move(m), Parity::odd};
}

SpacePtr spinor_space(const CylinderModel& model) {
  const CliffordRep rep = build_clifford(1, 1);
  return make_space(kron(*rep.grading, CMatrix::Identity(model.lattice_dim(), model.lattice_dim())));
}

GradedOperator build_lorentzian_dirac(const CylinderModel& model) {
  const CliffordRep rep = build_clifford(1, 1);
  const CMatrix& g0 = rep.generators[0];
  const CMatrix& g1 = rep.generators[1];
  const CMatrix id = CMatrix::Identity(model.config.n_theta, model.config.n_theta);
  const CMatrix partial_t = kron(model.d_t, id);
  const CMatrix nabla_theta = kI * build_family_operator(model);
  CMatrix m = kron(CMatrix(-g0), partial_t) + kron(g1, nabla_theta);
  return {spinor_space(model), std::move(m), Parity::odd};
}

GradedOperator build_wick_dirac(const CylinderModel& model, WickSign sign) {
  const CliffordRep rot = wick_rotate_clifford(build_clifford(1, 1), sign);
  const CMatrix id = CMatrix::Identity(model.config.n_theta, model.config.n_theta);
  const CMatrix partial_t = kron(model.d_t, id);
  const CMatrix nabla_theta = kI * build_family_operator(model);
  CMatrix m = kron(rot.generators[0], partial_t) + kron(rot.generators[1], nabla_theta);
  return {spinor_space(model), std::move(m), Parity::odd};
}

Eigen::VectorXd constant_metric_product_spectrum(const CylinderModel& model) {
  const double c = model.metric(0, 0);
  if ((model.metric.array() != c).any()) {
    throw InvalidArgument("constant_metric_product_spectrum: metric is not constant");
  }
  const auto& cfg = model.config;
  const Eigen::VectorXd k = derivative_symbols(cfg.n_theta, cfg.l_theta, cfg.spin, cfg.stencil) / std::sqrt(c);
  const Eigen::VectorXd m = derivative_symbols(cfg.n_t, cfg.l_t, SpinStructure::periodic, cfg.stencil);
  std::vector<double> out;
  for (Index a = 0; a < k.size(); ++a) {
    for (Index b = 0; b < m.size(); ++b) {
      const double r = std::hypot(k(a), m(b));
      out.push_back(r);
      out.push_back(-r);
    }
  }
  std::sort(out.begin(), out.end());
  return Eigen::Map<Eigen::VectorXd>(out.data(), static_cast<Index>(out.size()));
}

double slice_difference_quotient(const CylinderModel& model) {
  const int nt = model.config.n_t;
  const double dt = model.config.l_t / nt;
  double worst = 0.0;
  for (int k = 0; k < nt; ++k) {
    const int next = (k + 1) % nt;
    const CMatrix a = build_circle_dirac(model.metric.row(k).transpose(), model.d_theta);
    const CMatrix b = build_circle_dirac(model.metric.row(next).transpose(), model.d_theta);
    worst = std::max(worst, operator_norm(CMatrix(b - a)) / dt);
  }
  return worst;
}

CounterModel build_counter_model(int n_theta, int n_t, double l_theta, double l_t) {
  const CMatrix dth = spectral_derivative(n_theta, l_theta, SpinStructure::periodic);
  const CMatrix dt = spectral_derivative(n_t, l_t, SpinStructure::periodic);
  const Eigen::VectorXd theta = lattice_points(n_theta, l_theta);
  const Eigen::VectorXcd c = (2.0 + theta.array().sin()).cast<cplx>();
  const CMatrix id_t = CMatrix::Identity(n_t, n_t);
  return {kron(id_t, CMatrix(-kI * dth)), kron(CMatrix(-kI * dt), CMatrix(c.asDiagonal()))};
}

}  // namespace wick
