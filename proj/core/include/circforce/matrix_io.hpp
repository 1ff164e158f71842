#pragma once

#include <circforce/matrix.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace circforce {

// One row per line, entries separated by single spaces. Rationals are written "p/q";
// quadratic scalars "p/q+r/s*sqrt(D)" with D also written p/q.

void write_matrix(std::ostream& out, const RationalMatrix& m);
void write_matrix(std::ostream& out, const QuadMatrix& m);
std::string to_text(const RationalMatrix& m);
std::string to_text(const QuadMatrix& m);

/// Accepts both entry forms; bare integers are allowed. All radical entries must share D.
/// Throws ParseError with the offending line and column.
QuadMatrix read_matrix(std::istream& in);
QuadMatrix parse_matrix(std::string_view text);

/// As parse_matrix, but rejects entries with a nonzero radical part.
RationalMatrix parse_rational_matrix(std::string_view text);

} // namespace circforce
