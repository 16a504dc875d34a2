#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "saddle/matrix_view.hpp"

namespace saddle {

/// Malformed matrix file or command-line input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads the text format: a header line "m n", then m lines of n
/// whitespace-separated decimal literals. Blank lines are ignored. Only
/// finite values are accepted. Throws InputError.
DenseMatrix parse_matrix(std::istream& in);
DenseMatrix read_matrix_file(const std::string& path);

/// Writes the same format; values use the shortest round-trip form, so
/// parse(write(A)) reproduces A bit for bit.
void write_matrix(std::ostream& out, const MatrixSource& m);

/// Shortest decimal literal that parses back to exactly `x`.
std::string format_double(double x);

}  // namespace saddle
