#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fibered {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

/// a / b, asserting exactness.
inline Integer divexact(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divisible(const Integer& a, const Integer& b) {
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline std::string to_string(const Integer& a) { return a.get_str(); }
inline std::string to_string(const Rational& a) { return a.get_str(); }

inline Rational parse_rational(const std::string& s) {
  Rational q(s, 10);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace fibered
