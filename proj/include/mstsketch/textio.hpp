#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "mstsketch/errors.hpp"

namespace mstsketch {

// Shortest round-trip decimal form; the same value always prints the same
// bytes, which is what makes emitted tables byte-stable.
inline std::string format_double(double x) {
  if (std::isnan(x))
    return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

inline double parse_double_field(std::string_view s) {
  if (s == "nan")
    return std::nan("");
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw ValidationError("cannot parse number from `" + std::string(s) + "`");
  return v;
}

inline std::uint64_t parse_u64_field(std::string_view s) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw ValidationError("cannot parse integer from `" + std::string(s) + "`");
  return v;
}

inline std::vector<std::string_view> split_fields(std::string_view line,
                                                  char sep = ',') {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t pos = text.find('\n', start);
    if (pos == std::string_view::npos)
      pos = text.size();
    if (pos > start)
      out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

} // namespace mstsketch
