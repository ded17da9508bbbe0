#include "wick/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace wick {

namespace {

void check_lattice(int n, double length) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("lattice size must be even and at least 2, got " + std::to_string(n));
  if (!(length > 0.0)) throw InvalidArgument("lattice period must be positive");
}

}  // namespace

std::string_view to_string(SpinStructure s) { return s == SpinStructure::periodic ? "periodic" : "antiperiodic"; }

std::string_view to_string(Stencil s) { return s == Stencil::spectral ? "spectral" : "central"; }

SpinStructure parse_spin_structure(std::string_view s) {
  if (s == "periodic") return SpinStructure::periodic;
  if (s == "antiperiodic") return SpinStructure::antiperiodic;
  throw InvalidArgument("unknown spin structure '" + std::string(s) + "'");
}

Stencil parse_stencil(std::string_view s) {
  if (s == "spectral") return Stencil::spectral;
  if (s == "central") return Stencil::central;
  throw InvalidArgument("unknown stencil '" + std::string(s) + "'");
}

CMatrix spectral_derivative(int n, double length, SpinStructure bc) {
  check_lattice(n, length);
  const double scale = 2.0 * std::numbers::pi / length;
  CMatrix d = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double x = (i - j) * std::numbers::pi / n;
      const double sign = (i - j) % 2 == 0 ? 1.0 : -1.0;
      const double kernel = bc == SpinStructure::periodic ? 1.0 / std::tan(x) : 1.0 / std::sin(x);
      d(i, j) = scale * 0.5 * sign * kernel;
    }
  }
  return d;
}

CMatrix central_derivative(int n, double length, SpinStructure bc) {
  check_lattice(n, length);
  const double h = length / n;
  const double wrap = bc == SpinStructure::periodic ? 1.0 : -1.0;
  CMatrix d = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const int up = (i + 1) % n;
    const int down = (i + n - 1) % n;
    d(i, up) += (i + 1 == n ? wrap : 1.0) / (2.0 * h);
    d(i, down) -= (i == 0 ? wrap : 1.0) / (2.0 * h);
  }
  return d;
}

CMatrix derivative_matrix(int n, double length, SpinStructure bc, Stencil stencil) {
  return stencil == Stencil::spectral ? spectral_derivative(n, length, bc) : central_derivative(n, length, bc);
}

Eigen::VectorXd derivative_symbols(int n, double length, SpinStructure bc, Stencil stencil) {
  check_lattice(n, length);
  const double scale = 2.0 * std::numbers::pi / length;
  const double shift = bc == SpinStructure::periodic ? 0.0 : 0.5;
  std::vector<double> out;
  for (int k = -n / 2; k < n / 2; ++k) {
    const double q = k + shift;
    if (stencil == Stencil::central) {
      const double h = length / n;
      out.push_back(std::sin(scale * q * h) / h);
    } else if (bc == SpinStructure::periodic && k == -n / 2) {
      out.push_back(0.0);  // Nyquist mode
    } else {
      out.push_back(scale * q);
    }
  }
  std::sort(out.begin(), out.end());
  return Eigen::Map<Eigen::VectorXd>(out.data(), static_cast<Index>(out.size()));
}

Eigen::VectorXd lattice_points(int n, double length) {
  Eigen::VectorXd x(n);
  for (int j = 0; j < n; ++j) x(j) = j * length / n;
  return x;
}

}  // namespace wick
