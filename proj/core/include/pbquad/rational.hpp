#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pbquad {

// Exact arbitrary-precision rational. GMP keeps every value produced by
// arithmetic in lowest terms with a positive denominator; values built from
// a numerator/denominator pair must go through make_rational.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts `3`, `-3`, `+3`, `-3/2`. Rejects zero denominators, decimals,
// signs on the denominator and embedded whitespace. Throws ParseError.
Rational parse_rational(std::string_view text);

// `3`, `-3/2`; the inverse of parse_rational on canonical values.
std::string to_string(const Rational& value);

}  // namespace pbquad
