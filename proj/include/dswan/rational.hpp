#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dswan {

using Integer = mpz_class;
using Rational = mpq_class;

/// p-adic valuation of a nonzero integer.
int vp(const Integer& x, unsigned p);

/// p-adic valuation of a nonzero rational.
int vp(const Rational& x, unsigned p);

/// Parses "a", "-a" or "a/b"; throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "a/b" (or "a" when the denominator is 1).
std::string to_string(const Rational& q);

Rational make_rational(long num, long den = 1);

bool is_integer(const Rational& q);

Integer factorial(unsigned n);

}  // namespace dswan
