#pragma once

// Arbitrary-precision integer and rational scalars, plus the handful of
// number-theoretic helpers the rest of the library leans on.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gkc {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0)
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return z;
}

inline std::string to_string(const Integer& z) { return z.get_str(10); }

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

inline Integer abs_value(const Integer& z) { return abs(z); }

inline Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer pow2(unsigned long e) {
  Integer z;
  mpz_ui_pow_ui(z.get_mpz_t(), 2, e);
  return z;
}

/// 2-adic valuation; v2(0) is reported as 0 by convention, callers guard zero.
inline unsigned long v2(const Integer& z) {
  if (z == 0) return 0;
  return mpz_scan1(z.get_mpz_t(), 0);
}

/// Largest odd divisor of |z| (1 for z = 0).
inline Integer odd_part(const Integer& z) {
  if (z == 0) return 1;
  Integer r;
  mpz_tdiv_q_2exp(r.get_mpz_t(), z.get_mpz_t(), v2(z));
  return abs(r);
}

/// Floor division, remainder in [0, |b|) for b > 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer mod_floor(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool fits_u64(const Integer& z) {
  return z >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Integer& z) {
  if (!fits_u64(z)) throw std::overflow_error("integer does not fit in 64 bits: " + to_string(z));
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, z.get_mpz_t());
  return out;
}

inline Integer from_u64(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return z;
}

/// Positive divisors of n > 0 in ascending order, by trial division.
inline std::vector<Integer> divisors(const Integer& n) {
  if (n <= 0) throw std::domain_error("divisors of a non-positive integer");
  std::vector<Integer> low, high;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      low.push_back(d);
      if (d * d != n) high.push_back(n / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

}  // namespace gkc
