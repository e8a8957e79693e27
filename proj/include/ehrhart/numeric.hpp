#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ehrhart/errors.hpp"

namespace ehrhart {

// All arithmetic in this library is exact. Integers and rationals are
// arbitrary precision; mpq_class keeps the canonical reduced form
// (positive denominator, coprime numerator/denominator) after every
// operation.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int num(const Rat& r) { return r.get_num(); }
inline Int den(const Rat& r) { return r.get_den(); }

inline bool is_integral(const Rat& r) { return den(r) == 1; }

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

// floor(a / b), b != 0
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& r) { return floor_div(num(r), den(r)); }

inline Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), num(r).get_mpz_t(), den(r).get_mpz_t());
  return q;
}

inline Rat frac_part(const Rat& r) { return r - Rat(floor_rat(r)); }

inline Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// Serialization contract: "p/q" reduced with q > 0, or "p" when q = 1.
// mpq_class keeps results of arithmetic canonical, but the two-argument
// constructor does not reduce, so normalize defensively here.
inline std::string to_string(const Rat& r) {
  Rat c(r);
  c.canonicalize();
  if (is_integral(c)) return num(c).get_str();
  return num(c).get_str() + "/" + den(c).get_str();
}

inline Rat parse_rational(const std::string& s) {
  Rat r;
  if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("invalid rational: '" + s + "'");
  if (den(r) == 0) throw ParseError("zero denominator in rational: '" + s + "'");
  r.canonicalize();
  return r;
}

inline Int parse_integer(const std::string& s) {
  Int v;
  if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
    throw ParseError("invalid integer: '" + s + "'");
  return v;
}

inline RatVec to_rat_vec(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

}  // namespace ehrhart
