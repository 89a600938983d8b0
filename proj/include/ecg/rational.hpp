#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace ecg {

/// Exact arbitrary-precision rational. Always held in lowest terms with a
/// positive denominator; every arithmetic operation is exact. No floating
/// point is used anywhere downstream of this type.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Renders as "p/q", or just "p" when the denominator is 1. Inverse of
/// parse_rational for every value.
std::string to_fraction(const Rational& value);

/// Parses "p" or "p/q" with an optional leading sign on p. The denominator
/// must be a positive integer; "1/0" and any other malformed text throw
/// ValidationError. The result is reduced to lowest terms.
Rational parse_rational(std::string_view text);

}  // namespace ecg
