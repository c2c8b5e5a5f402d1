#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace cyclebound {

// Exact rational scalar. Always canonical: positive denominator,
// gcd(|numerator|, denominator) = 1, so equal values have identical
// representations and compare equal bit-for-bit.
//
// All weights, cycle weights, phi values and bounds in this library are
// Rationals; nothing is ever rounded.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int n) : value_(n) {}
  Rational(long n) : value_(n) {}
  Rational(long num, long den);

  // Accepts "p", "p/q" with q > 0, or a decimal literal like "-3.25"
  // (converted exactly). Throws ParseError on anything else.
  static Rational parse(std::string_view text);

  // "p/q", or "p" when the denominator is 1.
  std::string str() const;

  double to_double() const { return value_.get_d(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }
  bool is_negative() const { return sign() < 0; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(-a.value_); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) >= 0; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.value_))); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;  // invariant: canonical
};

}  // namespace cyclebound
