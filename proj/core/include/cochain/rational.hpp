#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cochain {

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or "-p/q". Throws ParseError on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Formats as "num/den" (the denominator is always printed).
std::string to_fraction_string(const Rational& q);

Rational factorial(unsigned n);

Integer binomial(unsigned n, unsigned k);

}  // namespace cochain
