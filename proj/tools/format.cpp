#include "format.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

namespace casimir_landau::cli {

int significant_digits(std::string_view text) {
  int digits = 0;
  bool leading = true;
  int trailing_zeros = 0;
  for (char ch : text) {
    if (ch == 'e' || ch == 'E') break;
    if (!std::isdigit(static_cast<unsigned char>(ch))) continue;
    if (leading && ch == '0') continue;
    leading = false;
    ++digits;
    trailing_zeros = ch == '0' ? trailing_zeros + 1 : 0;
  }
  // Trailing zeros in the integer part of a fixed string ("1200") are
  // placeholders, not precision.
  bool const has_point = text.find('.') != std::string_view::npos;
  bool const has_exp = text.find_first_of("eE") != std::string_view::npos;
  if (!has_point && !has_exp) digits -= trailing_zeros;
  return digits == 0 ? 1 : digits;
}

std::string format_number(double value, int precision) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0) return "0";

  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  std::string shortest(buf.data(), res.ptr);
  if (significant_digits(shortest) <= precision) return shortest;

  res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                      std::chars_format::general, precision);
  return std::string(buf.data(), res.ptr);
}

}  // namespace casimir_landau::cli
