#include "forge/util/numfmt.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "forge/errors.hpp"

namespace forge::util {

std::string format_double(double value, int significant_digits) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value,
                             std::chars_format::general, significant_digits);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& text, long line_for_error) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto res = std::from_chars(first, last, value, std::chars_format::general);
    if (res.ec != std::errc() || res.ptr != last) {
        throw ParseError("not a number: '" + text + "'", line_for_error);
    }
    if (!std::isfinite(value)) {
        throw ParseError("non-finite number: '" + text + "'", line_for_error);
    }
    return value;
}

long parse_long(const std::string& text, long line_for_error) {
    long value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last) {
        throw ParseError("not an integer: '" + text + "'", line_for_error);
    }
    return value;
}

} // namespace forge::util
