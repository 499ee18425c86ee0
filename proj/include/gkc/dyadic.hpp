#pragma once

// Exact dyadic rationals Z[1/2] and rationals extended by +infinity.

#include "gkc/integer.hpp"

#include <algorithm>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace gkc {

/// numerator / 2^exponent, kept canonical: exponent == 0 or numerator odd.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Dyadic(Integer n) : num_(std::move(n)) {}

  static Dyadic canonical(Integer numerator, unsigned long exponent) {
    Dyadic d;
    if (numerator == 0) return d;
    const unsigned long shift = std::min(v2(numerator), exponent);
    mpz_tdiv_q_2exp(numerator.get_mpz_t(), numerator.get_mpz_t(), shift);
    d.num_ = std::move(numerator);
    d.exp_ = exponent - shift;
    return d;
  }

  const Integer& numerator() const noexcept { return num_; }
  unsigned long exponent() const noexcept { return exp_; }

  Rational to_rational() const {
    Rational q(num_, pow2(exp_));
    q.canonicalize();
    return q;
  }

  /// Multiply by 2^k for any integer k.
  Dyadic times_pow2(long k) const {
    if (k >= 0) {
      const auto uk = static_cast<unsigned long>(k);
      if (uk <= exp_) return canonical(num_, exp_ - uk);
      Integer n;
      mpz_mul_2exp(n.get_mpz_t(), num_.get_mpz_t(), uk - exp_);
      return canonical(std::move(n), 0);
    }
    return canonical(num_, exp_ + static_cast<unsigned long>(-k));
  }

  Dyadic operator-() const {
    Dyadic d = *this;
    d.num_ = -d.num_;
    return d;
  }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    const unsigned long e = std::max(a.exp_, b.exp_);
    Integer na, nb;
    mpz_mul_2exp(na.get_mpz_t(), a.num_.get_mpz_t(), e - a.exp_);
    mpz_mul_2exp(nb.get_mpz_t(), b.num_.get_mpz_t(), e - b.exp_);
    return canonical(na + nb, e);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return canonical(a.num_ * b.num_, a.exp_ + b.exp_);
  }

  friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.exp_ == b.exp_ && a.num_ == b.num_; }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    const int c = cmp(a.to_rational(), b.to_rational());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::string str() const { return exp_ == 0 ? to_string(num_) : to_string(num_) + "/" + to_string(pow2(exp_)); }
  friend std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }

 private:
  Integer num_ = 0;
  unsigned long exp_ = 0;
};

/// Parses "a" or "a/2^e" written as "a/b" with b a power of two.
inline Dyadic parse_dyadic(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Dyadic(parse_integer(text));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den <= 0 || odd_part(den) != 1) throw std::invalid_argument("not a dyadic rational: " + text);
  return Dyadic::canonical(parse_integer(text.substr(0, slash)), v2(den));
}

/// A reduced rational or +infinity; infinity compares above every rational.
class RationalOrInfinity {
 public:
  RationalOrInfinity() = default;
  RationalOrInfinity(Rational q) : value_(std::move(q)) { value_.canonicalize(); }  // NOLINT
  RationalOrInfinity(long n) : value_(n) {}                                          // NOLINT

  static RationalOrInfinity infinity() {
    RationalOrInfinity r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const noexcept { return infinite_; }
  const Rational& value() const {
    if (infinite_) throw std::logic_error("value() of infinity");
    return value_;
  }

  friend bool operator==(const RationalOrInfinity& a, const RationalOrInfinity& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const RationalOrInfinity& a, const RationalOrInfinity& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::string str() const { return infinite_ ? "inf" : to_string(value_); }
  friend std::ostream& operator<<(std::ostream& os, const RationalOrInfinity& r) { return os << r.str(); }

 private:
  Rational value_ = 0;
  bool infinite_ = false;
};

inline RationalOrInfinity parse_rational_or_infinity(const std::string& text) {
  if (text == "inf" || text == "infinity") return RationalOrInfinity::infinity();
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("not a rational: " + text);
  q.canonicalize();
  return RationalOrInfinity(q);
}

}  // namespace gkc
