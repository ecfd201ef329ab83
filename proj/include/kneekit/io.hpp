#pragma once

// File formats shared by the command-line tools.

#include <iosfwd>
#include <string>

#include "kneekit/core.hpp"

namespace kneekit {

/// Malformed input file; the message names the offending row and column.
class ParseError : public UsageError {
 public:
  using UsageError::UsageError;
};

/// Comma-separated rows of m numbers. A first row that does not parse as
/// numbers is taken as a header. Blank lines are skipped; a trailing '\r' is tolerated.
std::vector<Point> parse_csv(std::istream& in, const std::string& source = "input");
TradeoffSet read_csv(const std::string& path);

/// Shortest text that round-trips to the same double.
std::string format_number(double value);

/// Header f1..fm, then one row per point, '\n' line endings.
void write_csv(std::ostream& out, const std::vector<Point>& rows, std::size_t dimension);
void write_csv_file(const std::string& path, const std::vector<Point>& rows, std::size_t dimension);

/// Six digits after the point and an exponent without padding, e.g. 7.071068E-1.
std::string format_scientific(double value);

/// Lower-case hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);
std::string read_file(const std::string& path);

}  // namespace kneekit
