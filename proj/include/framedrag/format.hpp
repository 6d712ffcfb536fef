#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

namespace framedrag {

/// Shortest text of `x` at 17 significant digits; parses back to the same double.
inline std::string format_exact(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

/// Four significant digits for human-readable summaries.
inline std::string format_short(double x) {
    if (!std::isfinite(x)) return format_exact(x);
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 4);
    return std::string(buf, res.ptr);
}

} // namespace framedrag
