#pragma once

// Matrix serialisation.
//
// Binary layout (all integers and doubles little-endian):
//
//   offset  size  field
//   0       4     magic "WCMX"
//   4       4     uint32 format version (= 1)
//   8       8     uint64 rows
//   16      8     uint64 cols
//   24      16*rows*cols  entries, column-major, each (double re, double im)
//
// Matrix Market: dense matrices are written in `array complex general`
// format (column-major, one "re im" pair per line); sparse matrices in
// `coordinate complex general` format.

#include <filesystem>

#include "wick/operator_core.hpp"

namespace wick::io {

void write_binary(const std::filesystem::path& path, const CMatrix& m);
CMatrix read_binary(const std::filesystem::path& path);

void write_matrix_market(const std::filesystem::path& path, const CMatrix& m);
CMatrix read_matrix_market(const std::filesystem::path& path);

void write_matrix_market(const std::filesystem::path& path, const SparseCMatrix& m);

/// Writes `contents` to a sibling temporary file and renames it over `path`.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace wick::io
