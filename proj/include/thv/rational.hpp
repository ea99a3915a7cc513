#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace thv {

// Exact arbitrary-precision arithmetic. Straightening coefficients grow
// combinatorially, so fixed-width integers are not an option here.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "3", "-48", "1/2". Denominator omitted when 1.
std::string to_string(const Rational& q);

/// Parses `int ("/" nat)?`. Throws ParseError on malformed input or a zero
/// denominator.
Rational parse_rational(std::string_view text);

}  // namespace thv
