#include "wick/matrix_io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include <unsupported/Eigen/SparseExtra>

namespace wick::io {

namespace {

static_assert(std::endian::native == std::endian::little, "binary matrix format assumes a little-endian host");

constexpr std::array<char, 4> kMagic{'W', 'C', 'M', 'X'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <class T>
T get(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw Error("read_binary: truncated file");
  return value;
}

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

void write_binary(const std::filesystem::path& path, const CMatrix& m) {
  std::ostringstream buf(std::ios::binary);
  buf.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(buf, kVersion);
  put<std::uint64_t>(buf, static_cast<std::uint64_t>(m.rows()));
  put<std::uint64_t>(buf, static_cast<std::uint64_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      put<double>(buf, m(i, j).real());
      put<double>(buf, m(i, j).imag());
    }
  }
  write_file_atomically(path, buf.str());
}

CMatrix read_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw Error("read_binary: bad magic in " + path.string());
  const auto version = get<std::uint32_t>(in);
  if (version != kVersion) throw Error("read_binary: unsupported version " + std::to_string(version));
  const auto rows = static_cast<Index>(get<std::uint64_t>(in));
  const auto cols = static_cast<Index>(get<std::uint64_t>(in));
  CMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = get<double>(in);
      const double im = get<double>(in);
      m(i, j) = {re, im};
    }
  }
  return m;
}

void write_matrix_market(const std::filesystem::path& path, const CMatrix& m) {
  std::ostringstream out;
  out << "%%MatrixMarket matrix array complex general\n";
  out << m.rows() << ' ' << m.cols() << '\n';
  out << std::setprecision(17);
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out << m(i, j).real() << ' ' << m(i, j).imag() << '\n';
  write_file_atomically(path, out.str());
}

CMatrix read_matrix_market(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::string line;
  std::getline(in, line);
  if (line.rfind("%%MatrixMarket matrix array complex general", 0) != 0) {
    throw Error("read_matrix_market: only dense complex general arrays are supported");
  }
  while (std::getline(in, line) && !line.empty() && line[0] == '%') {
  }
  std::istringstream header(line);
  Index rows = 0, cols = 0;
  if (!(header >> rows >> cols)) throw Error("read_matrix_market: bad size line");
  CMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      double re = 0.0, im = 0.0;
      if (!(in >> re >> im)) throw Error("read_matrix_market: truncated data");
      m(i, j) = {re, im};
    }
  }
  return m;
}

void write_matrix_market(const std::filesystem::path& path, const SparseCMatrix& m) {
  if (!Eigen::saveMarket(m, path.string())) throw Error("cannot write " + path.string());
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    auto out = open_out(tmp, std::ios::out | std::ios::binary | std::ios::trunc);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot move output into place at " + path.string() + ": " + ec.message());
  }
}

}  // namespace wick::io
