#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wsat {

// Exact arbitrary-precision fraction, always canonical (lowest terms, q > 0).
using Rational = mpq_class;

// Accepts "p", "p/q", with optional sign. Throws ParseError on anything else,
// including q == 0 and decimal notation.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Builds p/q in canonical form. Throws InvalidArgument when q == 0.
Rational make_rational(long p, long q = 1);

// floor / ceil of an exact rational
mpz_class floor(const Rational& r);
mpz_class ceil(const Rational& r);

// Round half up: floor(r + 1/2).
mpz_class round_half_up(const Rational& r);

}  // namespace wsat
