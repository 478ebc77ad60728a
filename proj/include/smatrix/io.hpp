#pragma once

#include <iosfwd>
#include <string>

#include "smatrix/matrix.hpp"

namespace smatrix {

// Text format: first line "rows cols", then one line per row with
// space-separated decimal entries. Writing uses 17 significant digits so a
// read/write round trip is lossless.
std::string matrix_to_text(const Matrix& a);
Matrix matrix_from_text(std::istream& in);
Matrix matrix_from_text(const std::string& text);

void write_matrix_file(const Matrix& a, const std::string& path);
Matrix read_matrix_file(const std::string& path);

// CSV of integer entries; throws DomainError if any entry is not an integer.
std::string matrix_to_integer_csv(const Matrix& a);

}  // namespace smatrix
