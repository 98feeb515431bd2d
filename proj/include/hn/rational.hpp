#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hn {

/// Exact arbitrary-precision rational. All costs, allocations and LP data use it.
using Rational = mpq_class;

/// Builds num/den in canonical form. `den` must be nonzero.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p/q", integer, or plain decimal text ("1.5", "-0.25", ".5").
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Decimal rendering with at most `significant` significant digits, rounded
/// half away from zero from the exact value. Trailing zeros are stripped.
std::string to_decimal(const Rational& value, int significant = 15);

/// Decimal rendering with exactly `places` digits after the point.
std::string to_fixed(const Rational& value, int places);

/// Nearest multiple of 1/denom to sqrt(value); ties round up. `value` >= 0.
Rational rounded_sqrt(const Rational& value, std::int64_t denom);

Rational sum(const std::vector<Rational>& values);

}  // namespace hn
