#pragma once

#include <filesystem>
#include <iosfwd>

#include "permreg/matrix.hpp"

namespace permreg {

// Plain-text matrix format: one row per line, entries separated by commas
// and/or whitespace, lines starting with '#' (after optional leading
// blanks) and blank lines ignored. All rows must have the same length.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::filesystem::path& path);

// Writes comma-separated rows with 17 significant digits, so reading the
// output back reproduces every entry exactly.
void write_matrix(std::ostream& out, const Matrix& m);
void write_matrix_file(const std::filesystem::path& path, const Matrix& m);

}  // namespace permreg
