#pragma once

#include <iosfwd>
#include <string>

#include "gconvex/matanalysis.hpp"

namespace gconvex {

// Matrix file format shared by the matrix subcommands:
//   line 1: n
//   then n lines of n whitespace-separated entries
// where an entry is a decimal literal or `(re,im)` with no interior
// spaces. Ragged rows are rejected. Dimensions are capped at 256.
Matrix read_matrix(std::istream& in, const std::string& source_name = "<stream>");
Matrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const Matrix& m);
void write_matrix_file(const std::string& path, const Matrix& m);

// Single entry parser, also used for CLI vector flags.
cx parse_entry(const std::string& token);

}  // namespace gconvex
