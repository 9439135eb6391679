#pragma once

#include <charconv>
#include <cstdio>
#include <cstdint>
#include <iostream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey_forge/errors.hpp"

namespace ramsey_forge::detail {

// Line-oriented tokenizer shared by the text formats. Blank lines are
// skipped; every other line must hold exactly the requested field count.
class LineReader {
 public:
  LineReader(std::istream& in, std::string what)
      : in_(in), what_(std::move(what)) {}

  std::vector<std::string> next_fields(std::size_t count) {
    auto fields = next_line();
    if (fields.size() != count)
      throw FormatError(where() + ": expected " + std::to_string(count) +
                        " fields, got " + std::to_string(fields.size()));
    return fields;
  }

  // Next non-blank line split on whitespace; throws at end of input.
  std::vector<std::string> next_line() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ss(line);
      std::vector<std::string> fields;
      for (std::string tok; ss >> tok;) fields.push_back(tok);
      if (!fields.empty()) return fields;
    }
    throw FormatError(what_ + ": unexpected end of input after line " +
                      std::to_string(line_no_));
  }

  void expect_end() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw FormatError(where() + ": trailing content");
    }
  }

  std::string where() const {
    return what_ + " line " + std::to_string(line_no_);
  }

 private:
  std::istream& in_;
  std::string what_;
  std::size_t line_no_ = 0;
};

inline std::uint64_t parse_uint(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw FormatError(std::string("invalid ") + what + ": '" + std::string(s) +
                      "'");
  return v;
}

inline double parse_double(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty())
    throw FormatError(std::string("invalid ") + what + ": '" + s + "'");
  return v;
}

inline std::string format_fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

}  // namespace ramsey_forge::detail

namespace ramsey_forge {
class Graph;
class PointConfig;
namespace detail {
Graph read_edge_list(LineReader& reader);
PointConfig read_points(LineReader& reader);
}  // namespace detail
}  // namespace ramsey_forge
