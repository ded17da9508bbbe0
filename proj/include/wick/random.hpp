#pragma once

#include <cstdint>
#include <random>

#include "wick/operator_core.hpp"

namespace wick {

/// Seeded source of random test operators. Entries are complex Gaussians
/// scaled by 1/sqrt(n), so operator norms stay O(1) as n grows.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  cplx gaussian();
  CVector vector(Index n);
  CVector unit_vector(Index n);
  CMatrix matrix(Index n);
  CMatrix hermitian(Index n);
  /// Haar-ish unitary from the QR factorisation of a Gaussian matrix.
  CMatrix unitary(Index n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace wick
