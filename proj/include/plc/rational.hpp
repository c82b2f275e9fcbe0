#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace plc {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number over arbitrary-precision integers.
///
/// Canonical form is maintained at all times: the denominator is positive,
/// numerator and denominator are coprime, and zero is stored as 0/1. Two
/// Rationals compare equal iff they are the same number.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int value) : num_(std::move(value)), den_(1) {}  // NOLINT: implicit
  Rational(int value) : num_(value), den_(1) {}             // NOLINT: implicit
  Rational(long long value) : num_(value), den_(1) {}       // NOLINT: implicit

  Rational(Int numerator, Int denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  /// -1, 0, or +1.
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;  // denominators are positive
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Decimal rendering, "p/q" for non-integers and plain "p" for integers.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

 private:
  void normalize() {
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

}  // namespace plc
