#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <fmt/format.h>

namespace mcp {

/// Shortest round-trip decimal; integral values keep a trailing ".0".
inline std::string format_real(double x) {
  std::string s = fmt::format("{}", x);
  if (s.find_first_of(".eEn") == std::string::npos) {
    s += ".0";
  }
  return s;
}

inline std::string format_value(double x) { return format_real(x); }
inline std::string format_value(std::uint64_t x) { return std::to_string(x); }

/// Empty string for a missing value.
template <class T>
std::string format_optional(const std::optional<T>& x) {
  return x ? format_value(*x) : std::string();
}

}  // namespace mcp
