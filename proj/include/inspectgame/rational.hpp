#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace inspectgame {

/// Exact arbitrary-precision rational. GMP keeps values canonical (lowest
/// terms, positive denominator) through arithmetic; use make_rational /
/// parse_rational for construction so raw num/den pairs get canonicalized.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// Parses "-3/4", "7", or a plain decimal integer string. Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical text form: "num/den", or just "num" when den == 1.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// base^exp for nonnegative integer exponents; 0^0 == 1.
Rational rational_pow(const Rational& base, unsigned long exp);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace inspectgame
