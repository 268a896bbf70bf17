#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace isingtp {

using Rational = mpq_class;

// Parses "p/q", "p" or a plain decimal integer; the result is canonicalized.
// Throws InputError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

Rational pow2(long exponent);

// Exact square root of a non-negative rational if both numerator and
// denominator are perfect squares.
bool exact_sqrt(const Rational& q, Rational& root);

}  // namespace isingtp
