#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

#include "equistream/errors.hpp"

namespace equistream {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always kept in canonical form: positive
/// denominator, gcd(|num|, den) = 1. No operation rounds, ever; decimal
/// output exists only for display.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long long num, long long den)
      : Rational(BigInt(num), BigInt(den)) {}
  Rational(BigInt num, BigInt den) {
    if (den == 0) throw BadParameter("rational with zero denominator");
    if (den < 0) {  // keep the denominator positive for the backend
      num = -num;
      den = -den;
    }
    v_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
  }
  explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

  /// Parses "p/q", "p", or a plain decimal like "0.75".
  static Rational parse(const std::string& s);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  /// Canonical "p/q" string ("p" when q = 1).
  std::string str() const;
  double approx() const { return static_cast<double>(v_); }

  int sign() const { return v_.sign(); }
  Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw BadParameter("division by zero rational");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  boost::multiprecision::cpp_rational v_;
};

/// base^exp as an exact rational; exp may be negative.
Rational rational_pow(long long base, long long exp);

}  // namespace equistream
