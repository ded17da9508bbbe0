#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "wick/cylinder.hpp"
#include "wick/kl_conditions.hpp"
#include "wick/rotations.hpp"
#include "wick/spectrum.hpp"

using namespace wick;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

CylinderConfig small(const std::string& metric, int n_theta = 16, int n_t = 16) {
  CylinderConfig c;
  c.n_theta = n_theta;
  c.n_t = n_t;
  c.metric = metric;
  return c;
}

Eigen::VectorXd fft_symbols(const CMatrix& d, SpinStructure s) {
  return oracle::minus_i_derivative_spectrum(d, s == SpinStructure::periodic ? 1.0 : -1.0);
}

}  // namespace

TEST_CASE("metric ids") {
  CHECK(parse_metric("flat", kTwoPi)(1.0, 2.0) == 1.0);
  CHECK(parse_metric("constant:4", kTwoPi)(0.3, 0.1) == 4.0);
  CHECK(parse_metric("breathing", kTwoPi)(0.0, kTwoPi / 4) == doctest::Approx(2.25));
  CHECK(parse_metric("breathing:0.2", kTwoPi)(0.0, kTwoPi / 4) == doctest::Approx(1.44));
  CHECK(parse_metric("ripple", kTwoPi)(std::numbers::pi / 2, 0.0) == doctest::Approx(2.25));
  CHECK(parse_metric("wave", kTwoPi)(std::numbers::pi / 2, kTwoPi / 4) == doctest::Approx(2.25));
  CHECK_THROWS_AS(parse_metric("constant:-1", kTwoPi), InvalidArgument);
  CHECK_THROWS_AS(parse_metric("constant:0", kTwoPi), InvalidArgument);
  CHECK_THROWS_AS(parse_metric("constant", kTwoPi), InvalidArgument);
  CHECK_THROWS_AS(parse_metric("breathingx", kTwoPi), InvalidArgument);
  CHECK_THROWS_AS(parse_metric("hyperbolic", kTwoPi), InvalidArgument);
  // An amplitude of 1 makes the metric vanish at a sample point.
  CHECK_THROWS_AS(build_cylinder(small("ripple:1", 8, 4)), InvalidArgument);
}

TEST_CASE("circle Dirac operator spectra") {
  SUBCASE("flat periodic: integers, matching the FFT oracle") {
    const CMatrix d = build_circle_dirac(Eigen::VectorXd::Ones(64), 64, kTwoPi, SpinStructure::periodic);
    const Eigen::VectorXd ev = hermitian_eigenvalues(d);
    const Eigen::VectorXd fft = fft_symbols(spectral_derivative(64, kTwoPi, SpinStructure::periodic),
                                            SpinStructure::periodic);
    CHECK((ev - fft).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((ev.array() - ev.array().round()).abs().maxCoeff() <= 1e-10);
    CHECK(ev.cwiseAbs().maxCoeff() <= 32.0);
    CHECK(residual(d, CMatrix(-kI * spectral_derivative(64, kTwoPi, SpinStructure::periodic))) <= kExactTol);
  }
  SUBCASE("flat antiperiodic: half-integers") {
    const CMatrix d = build_circle_dirac(Eigen::VectorXd::Ones(32), 32, kTwoPi, SpinStructure::antiperiodic);
    const Eigen::VectorXd ev = hermitian_eigenvalues(d);
    const Eigen::VectorXd fft = fft_symbols(spectral_derivative(32, kTwoPi, SpinStructure::antiperiodic),
                                            SpinStructure::antiperiodic);
    CHECK((ev - fft).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(((ev.array() - 0.5) - (ev.array() - 0.5).round()).abs().maxCoeff() <= 1e-10);
  }
  SUBCASE("constant metric 4 halves the spectrum") {
    const CMatrix d = build_circle_dirac(Eigen::VectorXd::Constant(32, 4.0), 32, kTwoPi, SpinStructure::periodic);
    const Eigen::VectorXd flat = derivative_symbols(32, kTwoPi, SpinStructure::periodic, Stencil::spectral);
    CHECK((hermitian_eigenvalues(d) - 0.5 * flat).cwiseAbs().maxCoeff() <= 1e-10);
  }
  SUBCASE("variable metric is Hermitian") {
    const CylinderModel m = build_cylinder(small("ripple", 32, 2));
    const CMatrix d = build_circle_dirac(m.metric.row(0).transpose(), m.d_theta);
    CHECK(hermitian_residual(d) <= 1e-10);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(build_circle_dirac(Eigen::VectorXd::Constant(8, -1.0), 8, kTwoPi, SpinStructure::periodic),
                    InvalidArgument);
    CHECK_THROWS_AS(build_circle_dirac(Eigen::VectorXd::Ones(4), spectral_derivative(8, kTwoPi, SpinStructure::periodic)),
                    DimensionMismatch);
  }
}

TEST_CASE("family operator") {
  SUBCASE("constant in t: identical blocks") {
    const CylinderModel m = build_cylinder(small("ripple", 8, 4));
    const CMatrix fam = build_family_operator(m);
    const CMatrix d0 = build_circle_dirac(m.metric.row(0).transpose(), m.d_theta);
    CHECK(residual(fam, kron(CMatrix::Identity(4, 4), d0)) == 0.0);
  }
  SUBCASE("two-slice toy with g = 1 and g = 4") {
    CylinderModel m = build_cylinder(small("flat", 8, 2));
    m.metric.row(1).setConstant(4.0);
    const CMatrix fam = build_family_operator(m);
    const CMatrix d = spectral_derivative(8, kTwoPi, SpinStructure::periodic);
    CHECK(residual(CMatrix(fam.topLeftCorner(8, 8)), CMatrix(-kI * d)) <= kExactTol);
    CHECK(residual(CMatrix(fam.bottomRightCorner(8, 8)), CMatrix(-0.5 * kI * d)) <= kExactTol);
    CHECK(fam.topRightCorner(8, 8).norm() == 0.0);
    CHECK(fam.bottomLeftCorner(8, 8).norm() == 0.0);
  }
  SUBCASE("breathing metric: every block Hermitian") {
    const CylinderModel m = build_cylinder(small("breathing", 16, 8));
    const CMatrix fam = build_family_operator(m);
    for (int k = 0; k < 8; ++k) CHECK(hermitian_residual(CMatrix(fam.block(16 * k, 16 * k, 16, 16))) <= 1e-10);
    CHECK(hermitian_residual(build_time_operator(m)) <= kExactTol);
  }
}

TEST_CASE("product operator") {
  const CylinderModel m = build_cylinder(small("breathing", 8, 8));
  const GradedOperator p = build_product_operator(m);
  CHECK(hermitian_residual(p) <= kExactTol);
  CHECK(p.parity_residual() == 0.0);

  const CMatrix fam = build_family_operator(m);
  const CMatrix d2 = build_time_operator(m);
  const GradedOperator d(trivial_space(fam.rows()), fam + kI * d2);
  CHECK(residual(real_part(d).matrix(), fam) <= kExactTol);
  CHECK(residual(imag_part(d).matrix(), d2) <= kExactTol);
  CHECK(residual(double_odd_to_even(d).d_plus.op.matrix(), p.matrix()) <= kExactTol);

  const CMatrix sq = p.matrix() * p.matrix();
  const Index n = fam.rows();
  CHECK(sq.topRightCorner(n, n).norm() <= kExactTol);
  CHECK(sq.bottomLeftCorner(n, n).norm() <= kExactTol);
}

TEST_CASE("flat and constant torus product spectra against the FFT oracle") {
  for (const char* metric : {"flat", "constant:2.5"}) {
    for (SpinStructure spin : {SpinStructure::periodic, SpinStructure::antiperiodic}) {
      CAPTURE(metric);
      CylinderConfig c = small(metric, 16, 16);
      c.spin = spin;
      c.l_t = 3.0;
      const CylinderModel m = build_cylinder(c);
      const Eigen::VectorXd theta = fft_symbols(m.d_theta, spin) / std::sqrt(m.metric(0, 0));
      const Eigen::VectorXd t = fft_symbols(m.d_t, SpinStructure::periodic);
      const Eigen::VectorXd expected = oracle::torus_product_spectrum(theta, t);
      const SpectrumReport r = compare_spectra(build_product_operator(m), expected);
      CHECK(r.max_deviation <= kSpectralTol);
      CHECK((constant_metric_product_spectrum(m) - expected).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
  CHECK_THROWS_AS(constant_metric_product_spectrum(build_cylinder(small("ripple", 8, 4))), InvalidArgument);
}

TEST_CASE("Lorentzian Dirac operator: real and imaginary parts") {
  for (const char* metric : {"flat", "breathing", "wave"}) {
    CAPTURE(metric);
    const CylinderModel m = build_cylinder(small(metric, 8, 8));
    const GradedOperator d = build_lorentzian_dirac(m);
    CHECK(d.parity_residual() <= kExactTol);
    const CliffordRep rep = build_clifford(1, 1);
    const CMatrix re = kron(CMatrix(kI * rep.generators[1]), build_family_operator(m));
    const CMatrix im = kron(CMatrix(-rep.generators[0]), build_time_operator(m));
    CHECK(residual(real_part(d).matrix(), re) <= kExactTol);
    CHECK(residual(imag_part(d).matrix(), im) <= kExactTol);
    CHECK(same_space(d.space(), *spinor_space(m)));
  }
}

TEST_CASE("parallel time: the anticommutator vanishes; a breathing metric does not") {
  const CylinderModel flat = build_cylinder(small("ripple", 16, 8));
  const GradedOperator d = build_lorentzian_dirac(flat);
  CHECK(anticommutator(real_part(d), imag_part(d)).matrix().norm() <= kExactTol);

  const CylinderModel breathing = build_cylinder(small("breathing", 16, 8));
  const GradedOperator db = build_lorentzian_dirac(breathing);
  CHECK(anticommutator(real_part(db), imag_part(db)).matrix().norm() > 1e-3);
}

TEST_CASE("Wick diagram commutes and both rotations share a spectrum") {
  for (const char* metric : {"flat", "ripple"}) {
    const CylinderModel m = build_cylinder(small(metric, 8, 8));
    const WickPair w = wick_rotate(build_lorentzian_dirac(m));
    const GradedOperator plus = build_wick_dirac(m, WickSign::plus);
    const GradedOperator minus = build_wick_dirac(m, WickSign::minus);
    CHECK(residual(w.d_plus, plus) <= kExactTol);
    CHECK(residual(w.d_minus, minus) <= kExactTol);
    const SpectrumReport r = compare_spectra(hermitian_eigenvalues(plus.matrix()), hermitian_eigenvalues(minus.matrix()));
    CHECK(r.max_deviation <= kSpectralTol);
  }
}

TEST_CASE("slice difference quotient") {
  CHECK(slice_difference_quotient(build_cylinder(small("ripple", 8, 4))) == 0.0);
  const double q = slice_difference_quotient(build_cylinder(small("breathing", 8, 16)));
  CHECK(q > 0.0);
  CHECK(std::isfinite(q));
}

TEST_CASE("counter-model pair and its relative bound") {
  const CounterModel cm = build_counter_model(4, 8);
  CHECK(hermitian_residual(cm.s) <= kExactTol);
  CHECK(hermitian_residual(cm.t) <= kExactTol);
  const CMatrix anti = cm.s * cm.t + cm.t * cm.s;
  const double rho = relative_bound(anti, cm.s);
  CHECK(std::abs(rho - oracle::brute_force_rho(anti, cm.s)) <= 1e-10);
  CHECK(std::abs(rho - oracle::factorised_counter_rho(4, 8, kTwoPi, kTwoPi)) <= 1e-10);
}
