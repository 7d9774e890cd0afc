#pragma once

// Exact scalars in Q(sqrt2).
//
// A Scalar is r + s*sqrt2 with r, s arbitrary-precision rationals. Because
// sqrt2 is irrational the pair (r, s) is unique, so equality is
// componentwise and every value has exactly one representation.

#include <blocksuper/rational.hpp>

#include <utility>

namespace blocksuper {

inline Rational make_rational(long num, long den = 1) { return Rational(num, den); }

class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : rat_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational r) : rat_(std::move(r)) {}  // NOLINT
  Scalar(Rational r, Rational s) : rat_(std::move(r)), surd_(std::move(s)) {}

  static Scalar fraction(long num, long den) { return Scalar(make_rational(num, den)); }
  static Scalar sqrt2() { return Scalar(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return rat_; }
  const Rational& surd_part() const { return surd_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(surd_) == 0; }
  bool is_rational() const { return sgn(surd_) == 0; }
  bool is_one() const { return is_rational() && rat_ == 1; }

  Scalar conjugate() const { return Scalar(rat_, -surd_); }

  /// Field norm r^2 - 2 s^2; nonzero for every nonzero scalar.
  Rational norm() const { return rat_ * rat_ - 2 * surd_ * surd_; }

  Scalar inverse() const {
    if (is_zero()) throw arithmetic_error("division by zero scalar");
    if (is_rational()) return Scalar(Rational(1 / rat_));
    Rational n = norm();
    return Scalar(Rational(rat_ / n), Rational(-surd_ / n));
  }

  Scalar& operator+=(const Scalar& o) {
    rat_ += o.rat_;
    if (sgn(o.surd_) != 0) surd_ += o.surd_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    rat_ -= o.rat_;
    if (sgn(o.surd_) != 0) surd_ -= o.surd_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (is_rational() && o.is_rational()) {
      rat_ *= o.rat_;
      return *this;
    }
    Rational r = rat_ * o.rat_ + 2 * surd_ * o.surd_;
    Rational s = rat_ * o.surd_ + surd_ * o.rat_;
    rat_ = std::move(r);
    surd_ = std::move(s);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw arithmetic_error("division by zero scalar");
    if (o.is_rational()) {
      rat_ /= o.rat_;
      if (sgn(surd_) != 0) surd_ /= o.rat_;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(Scalar a) {
    a.rat_ = -a.rat_;
    a.surd_ = -a.surd_;
    return a;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rat_ == b.rat_ && a.surd_ == b.surd_;
  }

  /// Exact integer power; negative exponents invert first.
  friend Scalar pow(const Scalar& x, long n) {
    if (n < 0) {
      if (x.is_zero()) throw arithmetic_error("zero raised to a negative power");
      return pow(x.inverse(), -n);
    }
    Scalar result(1);
    Scalar base = x;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n > 0) base *= base;
    }
    return result;
  }

 private:
  Rational rat_{0};
  Rational surd_{0};
};

}  // namespace blocksuper
