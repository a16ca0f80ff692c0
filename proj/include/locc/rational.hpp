#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace locc {

/// Exact arbitrary-precision rational. GMP keeps results of arithmetic in
/// lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses a decimal literal ("0.36", "-1.5e-2", ".5") or a fraction ("3/5")
/// exactly. No floating point is involved: "0.36" becomes 9/25.
/// Throws std::invalid_argument on malformed input.
Rational parse_decimal(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

/// Always "num/den", including "1/1" and "0/1".
std::string to_fraction_string(const Rational& q);

/// Nearest integer, ties to even.
Integer round_half_even(const Rational& q);

/// Decimal rendering with `digits` significant digits, round-half-even.
/// Zero renders as "0". With trim = true, trailing fractional zeros (and a
/// dangling point) are removed.
std::string to_decimal(const Rational& q, int digits, bool trim = true);

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

}  // namespace locc
