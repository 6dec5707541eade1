#pragma once

#include <gmpxx.h>

#include <string>

namespace rbd {

// Exact rationals, always kept canonical (positive denominator, reduced).
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when the denominator is 1.
std::string to_fraction_string(const Rational& q);
Rational parse_rational(const std::string& text);

// Decimal with exactly `digits` places, rounded half away from zero.
std::string format_decimal(const Rational& q, int digits);
// Rounded to `digits` places, as an exact rational (n / 10^digits).
Rational round_decimal(const Rational& q, int digits);

double to_double(const Rational& q);

}  // namespace rbd
