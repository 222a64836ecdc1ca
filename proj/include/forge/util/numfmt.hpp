#pragma once

#include <cstdint>
#include <string>

namespace forge::util {

// Shortest decimal with the requested number of significant digits,
// locale independent. 17 digits round-trips an IEEE double exactly.
std::string format_double(double value, int significant_digits);

// Locale-independent strtod-equivalent; throws forge::ParseError on
// malformed input (trailing garbage included).
double parse_double(const std::string& text, long line_for_error = 0);

long parse_long(const std::string& text, long line_for_error = 0);

} // namespace forge::util
