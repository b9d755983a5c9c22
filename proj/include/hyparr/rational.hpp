#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyparr {

// Exact rational scalar. GMP keeps mpq values reduced with a positive
// denominator as long as they are built through the functions below (or
// through arithmetic, which always canonicalizes).
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

inline int sign(const Rational& q) { return sgn(q); }

// Accepts "p" or "p/q" with optional leading '-' or '+'. No decimals, no
// whitespace, q != 0. Throws ParseError.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& q);

// Comma-separated rationals, e.g. "3,-1/2". The empty string is the point of R^0.
Vector parse_point(std::string_view text);
std::string format_point(std::span<const Rational> v);

Rational make_rational(long num, long den = 1);

}  // namespace hyparr
