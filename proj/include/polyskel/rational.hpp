#pragma once

#include <gmpxx.h>

#include <string>

namespace polyskel {

// Exact rational backed by GMP. mpq_class keeps values canonical (reduced,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace polyskel
