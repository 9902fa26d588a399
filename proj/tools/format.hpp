#pragma once

#include <string>
#include <string_view>

namespace casimir_landau::cli {

//! Shortest round-trip representation, rounded to at most \p precision
//! significant digits. Locale independent.
std::string format_number(double value, int precision);

//! Number of significant digits in a plain decimal/scientific string.
int significant_digits(std::string_view text);

}  // namespace casimir_landau::cli
