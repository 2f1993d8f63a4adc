#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace traced {

using Rational = mpq_class;

// Accepts "p" or "p/q" with optional sign. Throws InvalidArgument.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

// num/den in lowest terms; den must be nonzero.
Rational make_rational(long num, long den);

Rational pow(const Rational& base, long exponent);

bool is_integer(const Rational& r);

}  // namespace traced
