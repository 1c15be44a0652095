#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace repsmooth {

// Exact rationals. GMP keeps every result canonical (reduced, positive
// denominator, zero stored as 0/1) as long as values are built through
// parse_rational or arithmetic on canonical operands.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q". Throws ParseError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace repsmooth
