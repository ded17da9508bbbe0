// wickbench: run check suites, export spectra and refinement sweeps.
//
// Exit codes: 0 all checks passed, 1 at least one check failed,
// 2 invalid invocation or configuration (a structured error is printed to
// stderr and, for `check`, written to the --out path).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "wick/clifford.hpp"
#include "wick/config.hpp"
#include "wick/cylinder.hpp"
#include "wick/kl_conditions.hpp"
#include "wick/matrix_io.hpp"
#include "wick/oscillator.hpp"
#include "wick/report.hpp"
#include "wick/spectrum.hpp"
#include "wick/suites.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

struct Overrides {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol_exact, tol_truncation, tol_spectral;
  std::optional<int> d, N, margin, n_theta, n_t;
  std::optional<double> omega;
  std::optional<std::string> metric, spin, stencil;
};

void add_model_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "INI configuration file")->check(CLI::ExistingFile);
  cmd->add_option("--d", o.d, "oscillator mode count");
  cmd->add_option("--N", o.N, "oscillator per-mode cutoff");
  cmd->add_option("--omega", o.omega, "oscillator frequency");
  cmd->add_option("--margin", o.margin, "interior margin m");
  cmd->add_option("--n-theta", o.n_theta, "cylinder lattice size in theta");
  cmd->add_option("--n-t", o.n_t, "cylinder lattice size in t");
  cmd->add_option("--metric", o.metric, "metric id: flat, constant:<c>, breathing[:a], ripple[:a], wave[:a]");
  cmd->add_option("--spin", o.spin, "periodic or antiperiodic");
  cmd->add_option("--stencil", o.stencil, "spectral or central");
}

wick::SuiteConfig resolve(const Overrides& o) {
  wick::SuiteConfig c = o.config_path.empty() ? wick::SuiteConfig{} : wick::load_config(o.config_path);
  if (o.seed) c.seed = *o.seed;
  if (o.tol_exact) c.tol.exact = *o.tol_exact;
  if (o.tol_truncation) c.tol.truncation = *o.tol_truncation;
  if (o.tol_spectral) c.tol.spectral = *o.tol_spectral;
  if (o.d) c.oscillator.d = *o.d;
  if (o.N) c.oscillator.N = *o.N;
  if (o.omega) c.oscillator.omega = *o.omega;
  if (o.margin) c.oscillator.margin = *o.margin;
  if (o.n_theta) c.cylinder.n_theta = *o.n_theta;
  if (o.n_t) c.cylinder.n_t = *o.n_t;
  if (o.metric) c.cylinder.metric = *o.metric;
  if (o.spin) c.cylinder.spin = wick::parse_spin_structure(*o.spin);
  if (o.stencil) c.cylinder.stencil = wick::parse_stencil(*o.stencil);
  wick::validate(c);
  return c;
}

int run_check_command(const std::string& suite, const Overrides& o, const std::string& out_flag) {
  std::filesystem::path out = out_flag;
  try {
    wick::SuiteConfig config = resolve(o);
    config.suite = suite;
    if (out.empty()) out = config.json_out;
    const wick::SuiteResult result = wick::run_suite(config);
    for (const auto& r : result.checks) {
      std::printf("%-4s %-48s residual %-12.3e tol %-9.1e %7.3fs\n", r.passed ? "PASS" : "FAIL", r.id.c_str(),
                  r.residual, r.tolerance, r.wall_seconds);
      if (!r.passed && !r.note.empty()) std::printf("     %s\n", r.note.c_str());
    }
    if (!out.empty()) wick::write_json(out, wick::suite_report(config, result));
    const bool ok = result.all_passed();
    std::printf("%s: %zu checks, %s\n", suite.c_str(), result.checks.size(), ok ? "all passed" : "FAILURES");
    return ok ? 0 : kExitFailed;
  } catch (const wick::Error& e) {
    const auto err = wick::error_report("invalid-configuration", e.what());
    std::cerr << err.dump(2) << '\n';
    if (!out.empty()) {
      try {
        wick::write_json(out, err);
      } catch (const std::exception&) {
      }
    }
    return kExitError;
  }
}

struct SpectrumData {
  Eigen::VectorXd eigenvalues;
  std::optional<Eigen::VectorXd> oracle;
  std::vector<int> sectors;
  std::optional<wick::SparseCMatrix> sparse;
  std::optional<wick::CMatrix> dense;
};

SpectrumData build_spectrum(const std::string& model, const wick::SuiteConfig& c) {
  SpectrumData s;
  if (model == "product" || model == "circle" || model == "lorentzian-plus" || model == "lorentzian-minus") {
    const wick::CylinderModel cyl = wick::build_cylinder(c.cylinder);
    const bool constant = (cyl.metric.array() == cyl.metric(0, 0)).all();
    if (model == "circle") {
      const wick::CMatrix d = wick::build_circle_dirac(cyl.metric.row(0).transpose(), cyl.d_theta);
      s.eigenvalues = wick::hermitian_eigenvalues(d);
      if (constant) {
        s.oracle = wick::derivative_symbols(c.cylinder.n_theta, c.cylinder.l_theta, c.cylinder.spin,
                                            c.cylinder.stencil) / std::sqrt(cyl.metric(0, 0));
      }
      s.dense = d;
    } else if (model == "product") {
      const wick::GradedOperator p = wick::build_product_operator(cyl);
      s.eigenvalues = wick::hermitian_eigenvalues(p.matrix());
      if (constant) s.oracle = wick::constant_metric_product_spectrum(cyl);
      s.dense = p.matrix();
    } else {
      const auto sign = model == "lorentzian-plus" ? wick::WickSign::plus : wick::WickSign::minus;
      const wick::GradedOperator d = wick::build_wick_dirac(cyl, sign);
      s.eigenvalues = wick::hermitian_eigenvalues(d.matrix());
      s.dense = d.matrix();
    }
  } else if (model == "oscillator-d1" || model == "oscillator-d1-squared") {
    const auto& p = c.oscillator;
    const wick::FockModel fm = wick::build_fock_model(p.d, p.N, p.omega, p.margin);
    if (model == "oscillator-d1") {
      const wick::SparseCMatrix d1 = wick::build_D1_D2(fm).d1;
      const std::vector<bool> all(static_cast<std::size_t>(fm.dim), true);
      const wick::SectorSpectrum spec = wick::sector_eigenvalues(d1, wick::excitation_sectors(fm), all);
      s.eigenvalues = spec.eigenvalues;
      s.sectors = spec.sectors;
      if (p.d == 1) {
        Eigen::VectorXd o(2 * p.N);
        for (int n = 0; n < p.N; ++n) {
          o(2 * n) = std::sqrt(2.0 * p.omega * n);
          o(2 * n + 1) = -o(2 * n);
        }
        std::sort(o.begin(), o.end());
        s.oracle = o;
      }
      s.sparse = d1;
    } else {
      const wick::SectorSpectrum spec = wick::interior_D1_squared_spectrum(fm);
      s.eigenvalues = spec.eigenvalues;
      s.sectors = spec.sectors;
      s.oracle = wick::interior_ladder(fm);
    }
  } else {
    throw wick::InvalidArgument("unknown model '" + model +
                                "' (product, circle, lorentzian-plus, lorentzian-minus, oscillator-d1, "
                                "oscillator-d1-squared)");
  }
  return s;
}

int run_spectrum_command(const std::string& model, const Overrides& o, const std::string& csv,
                         const std::string& matrix_out) {
  try {
    const wick::SuiteConfig config = resolve(o);
    const SpectrumData s = build_spectrum(model, config);
    std::printf("%s: %lld eigenvalues in [%.6g, %.6g]\n", model.c_str(), static_cast<long long>(s.eigenvalues.size()),
                s.eigenvalues.size() ? s.eigenvalues.minCoeff() : 0.0,
                s.eigenvalues.size() ? s.eigenvalues.maxCoeff() : 0.0);
    if (s.oracle) {
      const wick::SpectrumReport r = wick::compare_spectra(s.eigenvalues, *s.oracle);
      std::printf("max deviation from oracle: %.3e\n", r.max_deviation);
    }
    if (!csv.empty()) wick::export_spectrum(csv, s.eigenvalues, s.oracle, s.sectors);
    if (!matrix_out.empty()) {
      const std::filesystem::path path = matrix_out;
      const bool mtx = path.extension() == ".mtx";
      if (s.sparse) {
        if (mtx) {
          wick::io::write_matrix_market(path, *s.sparse);
        } else {
          wick::io::write_binary(path, wick::CMatrix(*s.sparse));
        }
      } else if (s.dense) {
        if (mtx) {
          wick::io::write_matrix_market(path, *s.dense);
        } else {
          wick::io::write_binary(path, *s.dense);
        }
      } else {
        throw wick::InvalidArgument("model '" + model + "' has no single operator to export");
      }
    }
    return 0;
  } catch (const wick::Error& e) {
    std::cerr << wick::error_report("spectrum", e.what()).dump(2) << '\n';
    return kExitError;
  }
}

int run_sweep_command(const std::string& probe, const Overrides& o, const std::string& sizes_text,
                      const std::string& csv) {
  try {
    wick::SuiteConfig config = resolve(o);
    const std::vector<int> sizes = wick::parse_int_list(sizes_text);
    wick::BoundSweep sweep;
    if (probe == "lorentzian") {
      if (!sizes.empty()) config.sweep.bounded_sizes = sizes;
      if (o.metric) config.sweep.metric = *o.metric;
      sweep = wick::lorentzian_sweep(config.sweep, config.cylinder);
    } else if (probe == "counter-model") {
      if (!sizes.empty()) config.sweep.counter_sizes = sizes;
      sweep = wick::counter_model_sweep(config.sweep);
    } else {
      throw wick::InvalidArgument("unknown probe '" + probe + "' (lorentzian, counter-model)");
    }
    std::fputs(wick::sweep_csv(sweep).c_str(), stdout);
    if (!csv.empty()) wick::write_sweep_csv(sweep, csv);
    return 0;
  } catch (const wick::Error& e) {
    std::cerr << wick::error_report("sweep", e.what()).dump(2) << '\n';
    return kExitError;
  }
}

int run_clifford_command(int t, int s, const std::string& json_path, const std::string& mtx_dir) {
  try {
    const wick::CliffordRep rep = wick::build_clifford(t, s);
    const nlohmann::json j = wick::to_json(rep);
    if (json_path.empty()) {
      std::cout << j.dump(2) << '\n';
    } else {
      wick::write_json(json_path, j);
    }
    if (!mtx_dir.empty()) {
      const std::filesystem::path dir = mtx_dir;
      std::filesystem::create_directories(dir);
      for (std::size_t k = 0; k < rep.generators.size(); ++k) {
        wick::io::write_matrix_market(dir / ("gamma" + std::to_string(k) + ".mtx"), rep.generators[k]);
      }
      wick::io::write_matrix_market(dir / "J.mtx", rep.fundamental_symmetry);
      if (rep.grading) wick::io::write_matrix_market(dir / "Gamma.mtx", *rep.grading);
    }
    return 0;
  } catch (const wick::Error& e) {
    std::cerr << wick::error_report("clifford", e.what()).dump(2) << '\n';
    return kExitError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wick rotation workbench: graded operators, doubling identities and lattice models"};
  app.require_subcommand(1);
  Overrides o;

  std::string suite, out;
  auto* check = app.add_subcommand("check", "run a named check suite");
  check->add_option("suite", suite, "core-identities | rotations | kl-probes | clifford | oscillator | cylinder | all")
      ->required();
  check->add_option("--seed", o.seed, "random seed");
  check->add_option("--tol-exact", o.tol_exact, "tolerance for exact-algebra checks");
  check->add_option("--tol-truncation", o.tol_truncation, "tolerance for interior-compressed identities");
  check->add_option("--tol-spectral", o.tol_spectral, "tolerance for spectral oracle comparisons");
  check->add_option("--out", out, "JSON report path");
  add_model_flags(check, o);

  std::string model, csv, matrix_out;
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of a model operator");
  spectrum->add_option("model", model,
                       "product | circle | lorentzian-plus | lorentzian-minus | oscillator-d1 | oscillator-d1-squared")
      ->required();
  spectrum->add_option("--csv", csv, "CSV output path");
  spectrum->add_option("--matrix-out", matrix_out, "export the operator (.mtx for Matrix Market, else binary)");
  add_model_flags(spectrum, o);

  std::string probe, sizes, sweep_csv;
  auto* sweep = app.add_subcommand("sweep", "relative-bound refinement sweep");
  sweep->add_option("probe", probe, "lorentzian | counter-model")->required();
  sweep->add_option("--sizes", sizes, "comma-separated refinement sizes");
  sweep->add_option("--csv", sweep_csv, "CSV output path");
  add_model_flags(sweep, o);

  int t = 1, s = 1;
  std::string json_path, mtx_dir;
  auto* cliff = app.add_subcommand("clifford", "print a Clifford representation");
  cliff->add_option("t", t, "timelike dimensions")->required();
  cliff->add_option("s", s, "spacelike dimensions")->required();
  cliff->add_option("--json", json_path, "write JSON here instead of stdout");
  cliff->add_option("--mtx-dir", mtx_dir, "also write each matrix in Matrix Market format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  if (*check) return run_check_command(suite, o, out);
  if (*spectrum) return run_spectrum_command(model, o, csv, matrix_out);
  if (*sweep) return run_sweep_command(probe, o, sizes, sweep_csv);
  return run_clifford_command(t, s, json_path, mtx_dir);
}
