#pragma once

#include <array>
#include <charconv>
#include <string>

namespace kolkata::detail {

// Shortest representation that round-trips to the same double.
inline std::string format_number(double value) {
  std::array<char, 64> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buffer.data(), end);
}

}  // namespace kolkata::detail
