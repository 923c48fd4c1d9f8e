#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace desalg {

// Exact scalar used everywhere. mpq_class values are kept canonicalized
// (reduced, positive denominator), so operator== is structural equality.
using Rational = mpq_class;

// Builds num/den from decimal strings. den must be nonzero.
inline Rational make_rational(const std::string& num, const std::string& den = "1") {
  mpz_class n, d;
  if (n.set_str(num, 10) != 0) throw std::invalid_argument("bad numerator: " + num);
  if (d.set_str(den, 10) != 0) throw std::invalid_argument("bad denominator: " + den);
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

// "3", "-7/2". Matches what make_rational accepts.
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace desalg
