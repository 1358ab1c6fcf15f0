#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "torickit/error.hpp"

namespace torickit {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(const BigRat& x) { return sgn(x) == 0; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// g = s*a + t*b with g >= 0.
inline void extended_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s, BigInt& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

/// Floor division, rounding toward negative infinity.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Least non-negative residue of a modulo m (m > 0).
inline BigInt mod_positive(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline BigInt floor(const BigRat& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline BigInt ceil(const BigRat& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// "p/q" in lowest terms, or just "p" when integral.
inline std::string to_string(const BigRat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline BigRat parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(ErrorKind::InvalidInput, "not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  BigInt d(den);
  if (is_zero(d)) throw bad();
  BigRat q(BigInt(num), d);
  q.canonicalize();
  return q;
}

}  // namespace torickit
