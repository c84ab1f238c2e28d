#pragma once

#include <gmpxx.h>

#include <string>

namespace quotdt {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in canonical form; gmp arithmetic requires a positive denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "p/q" in lowest terms, or just "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Always "p/q", even for integers. Used by the JSON writer.
inline std::string to_fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace quotdt
