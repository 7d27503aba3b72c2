#pragma once

#include <gmpxx.h>

#include <string>

#include "tourforge/errors.hpp"

namespace tourforge {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which makes equality structural.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q". Throws ParseError on anything else.
Rational rat_from_string(const std::string& s);

// "p" when the value is integral, otherwise "p/q" with q > 0.
std::string rat_to_string(const Rational& r);

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

// Exact conversion to long; throws if the value is non-integral or too big.
long rat_to_long(const Rational& r);

}  // namespace tourforge
