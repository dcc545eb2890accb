#pragma once

#include <string>
#include <string_view>

namespace spacs {

/// Parses an angle in radians. Accepts plain decimals ("0.25") and rational
/// multiples of pi: "pi", "-pi", "pi/9", "2pi/3", "2*pi/3", "3 * pi / 4".
/// Rational forms evaluate as (k * pi) / m so "pi/9" is bit-identical to
/// writing std::numbers::pi / 9 in code.
double parse_angle(std::string_view text);

/// Parses a plain decimal real; throws parse_error on trailing garbage.
double parse_real(std::string_view text);

/// Formats a double with 17 significant digits ("%.17g").
std::string format_real(double value);

}  // namespace spacs
