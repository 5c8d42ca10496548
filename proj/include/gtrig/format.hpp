#ifndef GTRIG_FORMAT_HPP
#define GTRIG_FORMAT_HPP

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

namespace gtrig::fmt {

/// Shortest round-trip representation; independent of the C locale.
inline std::string shortest(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

/// Scientific-free general format with the given number of significant digits.
inline std::string significant(double v, int digits)
{
    if (!std::isfinite(v))
        return shortest(v);
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

/// Fixed notation with `decimals` digits after the point.
inline std::string fixed(double v, int decimals)
{
    if (!std::isfinite(v))
        return shortest(v);
    if (v == 0.0)
        v = 0.0; // drop the sign of -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals);
    return std::string(buf, res.ptr);
}

/// Round half to even at `decimals` places, then print in fixed notation.
inline std::string rounded(double v, int decimals)
{
    const double scale = std::pow(10.0, decimals);
    const double r = std::nearbyint(v * scale) / scale; // default mode: ties to even
    return fixed(r, decimals);
}

} // namespace gtrig::fmt

#endif
