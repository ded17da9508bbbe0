#include "wick/spectrum.hpp"

#include <algorithm>
#include <sstream>

#include "wick/matrix_io.hpp"

namespace wick {

SpectrumReport compare_spectra(Eigen::VectorXd computed, Eigen::VectorXd oracle) {
  if (computed.size() != oracle.size()) {
    throw DimensionMismatch("compare_spectra: " + std::to_string(computed.size()) + " computed vs " +
                            std::to_string(oracle.size()) + " oracle eigenvalues");
  }
  std::sort(computed.begin(), computed.end());
  std::sort(oracle.begin(), oracle.end());
  SpectrumReport r;
  r.max_deviation = computed.size() == 0 ? 0.0 : (computed - oracle).cwiseAbs().maxCoeff();
  r.computed = std::move(computed);
  r.oracle = std::move(oracle);
  return r;
}

SpectrumReport compare_spectra(const GradedOperator& op, Eigen::VectorXd oracle) {
  require_hermitian(op, "compare_spectra", kTruncationTol);
  return compare_spectra(hermitian_eigenvalues(op.matrix()), std::move(oracle));
}

std::string spectrum_csv(const Eigen::VectorXd& eigenvalues, const std::optional<Eigen::VectorXd>& oracle,
                         const std::vector<int>& sectors) {
  if (oracle && oracle->size() != eigenvalues.size()) throw DimensionMismatch("spectrum_csv: oracle length");
  if (!sectors.empty() && static_cast<Index>(sectors.size()) != eigenvalues.size()) {
    throw DimensionMismatch("spectrum_csv: sector length");
  }
  std::ostringstream out;
  out.precision(17);
  out << "index,eigenvalue";
  if (oracle) out << ",oracle_eigenvalue,deviation";
  if (!sectors.empty()) out << ",sector";
  out << '\n';
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    out << i << ',' << eigenvalues(i);
    if (oracle) out << ',' << (*oracle)(i) << ',' << std::abs(eigenvalues(i) - (*oracle)(i));
    if (!sectors.empty()) out << ',' << sectors[static_cast<std::size_t>(i)];
    out << '\n';
  }
  return out.str();
}

void export_spectrum(const std::filesystem::path& path, const Eigen::VectorXd& eigenvalues,
                     const std::optional<Eigen::VectorXd>& oracle, const std::vector<int>& sectors) {
  io::write_file_atomically(path, spectrum_csv(eigenvalues, oracle, sectors));
}

}  // namespace wick
