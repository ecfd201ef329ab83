#include "kneekit/io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace kneekit {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

bool parse_double(const std::string& text, double& value) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  const char* begin = t.data() + (t.front() == '+' ? 1 : 0);
  const auto [end, ec] = std::from_chars(begin, t.data() + t.size(), value);
  return ec == std::errc() && end == t.data() + t.size();
}

}  // namespace

std::vector<Point> parse_csv(std::istream& in, const std::string& source) {
  std::vector<Point> rows;
  std::string line;
  std::size_t row = 0;
  bool first = true;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    Point values(cells.size());
    std::size_t bad = cells.size();
    for (std::size_t c = 0; c < cells.size() && bad == cells.size(); ++c) {
      if (!parse_double(cells[c], values[c])) bad = c;
    }
    if (bad != cells.size()) {
      if (first) {
        first = false;
        width = cells.size();
        continue;
      }
      throw ParseError(source + ": row " + std::to_string(row) + ", column " + std::to_string(bad + 1) +
                       ": not a number: '" + trim(cells[bad]) + "'");
    }
    for (std::size_t c = 0; c < values.size(); ++c) {
      if (!std::isfinite(values[c])) {
        throw ParseError(source + ": row " + std::to_string(row) + ", column " + std::to_string(c + 1) +
                         ": value is not finite");
      }
    }
    if (width == 0) width = values.size();
    if (values.size() != width) {
      throw ParseError(source + ": row " + std::to_string(row) + ": expected " + std::to_string(width) +
                       " columns, found " + std::to_string(values.size()));
    }
    first = false;
    rows.push_back(std::move(values));
  }
  if (rows.empty()) throw ParseError(source + ": no data rows");
  return rows;
}

TradeoffSet read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  const auto rows = parse_csv(in, path);
  try {
    return TradeoffSet::from_rows(rows);
  } catch (const UsageError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_number(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

void write_csv(std::ostream& out, const std::vector<Point>& rows, std::size_t dimension) {
  for (std::size_t k = 0; k < dimension; ++k) out << (k ? ",f" : "f") << k + 1;
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << format_number(row[k]);
    out << '\n';
  }
}

void write_csv_file(const std::string& path, const std::vector<Point>& rows, std::size_t dimension) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  write_csv(out, rows, dimension);
  if (!out) throw UsageError("failed writing '" + path + "'");
}

std::string format_scientific(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6E", value);
  std::string text(buffer);
  const auto e = text.find('E');
  if (e == std::string::npos) return text;
  std::string exponent = text.substr(e + 2);
  exponent.erase(0, std::min(exponent.find_first_not_of('0'), exponent.size() - 1));
  return text.substr(0, e + 2) + exponent;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace kneekit
