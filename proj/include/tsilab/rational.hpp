#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace tsilab {

using Int = boost::multiprecision::mpz_int;

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator, so equality is decidable and arithmetic never
/// rounds or overflows.
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p", "-p" or "p/q" (q > 0 after normalization; q != 0 required).
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& value);

/// Decimal rendering truncated toward zero to `digits` fractional digits.
std::string rational_to_decimal(const Rational& value, int digits);

/// Decimal rendering of value^(1/root), truncated, for value >= 0, root >= 1.
std::string rational_root_decimal(const Rational& value, int root, int digits);

/// base^exponent for exponent >= 0.
Rational rational_pow(const Rational& base, int exponent);

} // namespace tsilab
