#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace roughmap {

using Rational = boost::rational<std::int64_t>;

/// Truncates toward zero at `places` decimal digits, keeping the result exact.
Rational truncate_decimal(const Rational& value, int places);

/// Decimal rendering truncated at `places` digits with trailing zeros dropped:
/// 2/3 -> "0.66", 1/2 -> "0.5", 1 -> "1".
std::string format_decimal(const Rational& value, int places);

/// "num/den", or just "num" when the denominator is 1.
std::string format_fraction(const Rational& value);

/// Inverse of format_fraction; also accepts plain decimals such as "0.548".
Rational parse_rational(std::string_view text);

}  // namespace roughmap
