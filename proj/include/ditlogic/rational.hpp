#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ditlogic {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);
inline double to_double(double x) { return x; }

/// Parses an integer, a fraction `a/b`, or a decimal with optional exponent
/// (`0.25`, `-1.5e-3`) into the exact rational it denotes. Throws
/// Error{parse} with the offending character position.
Rational parse_rational(std::string_view text, std::size_t base_offset = 0);

}  // namespace ditlogic
