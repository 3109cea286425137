#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace infogreedy {

using Rational = mpq_class;

// Accepts "p/q", "p", or "-p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

inline Rational frac(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace infogreedy
