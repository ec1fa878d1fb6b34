#pragma once

// Exact rational carrier shared by every module. All arithmetic is done in
// GMP rationals, so identities are asserted with equality, never tolerance.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tropical {

using Rational = mpq_class;

// Accepts "p", "p/q", and decimals with a finite expansion ("-0.125").
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Rounded to `digits` places after the decimal point, half away from zero.
std::string to_decimal(const Rational& value, int digits);

double to_double(const Rational& value);

inline Rational rational(long num, unsigned long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace tropical
