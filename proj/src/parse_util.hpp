#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "nichebench/error.hpp"

namespace nichebench::detail {

struct RowContext {
  const std::string& file;
  std::size_t line;

  [[noreturn]] void fail(const std::string& reason) const {
    throw Error(ErrorKind::MalformedRow, file + ":" + std::to_string(line) + ": " + reason);
  }
};

inline std::int64_t parse_int(std::string_view s, const RowContext& ctx, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    ctx.fail(std::string("invalid ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

inline double parse_decimal(std::string_view s, const RowContext& ctx, const char* what) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    ctx.fail(std::string("invalid ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace nichebench::detail
