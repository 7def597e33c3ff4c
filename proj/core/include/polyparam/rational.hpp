// Exact arithmetic: arbitrary-precision integers and rationals on top of GMP.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace polyparam::poly {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Int(num), Int(den));
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Int floor_int(const Rational& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Int ceil_int(const Rational& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int m;
  mpz_lcm(m.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return m;
}

std::string to_text(const Int& v);
std::string to_text(const Rational& r);  // "n" or "n/d"

// Parses "n" or "n/d" with optional leading sign. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace polyparam::poly
