#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wick/operator_core.hpp"

namespace wick {

/// Sorted computed and oracle eigenvalues, paired by index.
struct SpectrumReport {
  Eigen::VectorXd computed;
  Eigen::VectorXd oracle;
  double max_deviation = 0.0;
};

/// Sorts both lists ascending and pairs them by index. Throws
/// DimensionMismatch if the lengths differ.
SpectrumReport compare_spectra(Eigen::VectorXd computed, Eigen::VectorXd oracle);
/// Eigensolves the Hermitian operator and compares against the oracle.
SpectrumReport compare_spectra(const GradedOperator& op, Eigen::VectorXd oracle);

/// CSV with header `index,eigenvalue[,oracle_eigenvalue,deviation][,sector]`,
/// LF line endings.
std::string spectrum_csv(const Eigen::VectorXd& eigenvalues, const std::optional<Eigen::VectorXd>& oracle = {},
                         const std::vector<int>& sectors = {});

void export_spectrum(const std::filesystem::path& path, const Eigen::VectorXd& eigenvalues,
                     const std::optional<Eigen::VectorXd>& oracle = {}, const std::vector<int>& sectors = {});

}  // namespace wick
