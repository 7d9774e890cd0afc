#pragma once

// Arbitrary-precision rationals with an inline fast path.
//
// Values whose reduced numerator and denominator fit in int64 are stored
// inline; everything else lives in an immutable shared GMP rational.
// Arithmetic runs in 128-bit integers and falls back to GMP on overflow, so
// results are always exact. Both forms are kept canonical (lowest terms,
// positive denominator, inline whenever possible), which makes equality a
// plain field comparison.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace blocksuper {

class arithmetic_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Rational {
 public:
  Rational() = default;
  Rational(long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : num_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw arithmetic_error("rational with zero denominator");
    *this = from_wide(num, den);
  }
  explicit Rational(const mpq_class& q) { *this = from_mpq(mpq_class(q)); }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw arithmetic_error("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    *this = from_mpq(std::move(q));
  }

  bool is_small() const { return !big_; }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    set_mpz(q.get_num(), num_);
    set_mpz(q.get_den(), den_);
    return q;
  }

  std::string get_str() const {
    if (big_) return big_->get_str();
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend int sgn(const Rational& r) {
    if (r.big_) return sgn(*r.big_);
    return (r.num_ > 0) - (r.num_ < 0);
  }

  friend Rational abs(const Rational& r) { return sgn(r) < 0 ? -r : r; }

  friend Rational operator-(const Rational& r) {
    if (!r.big_ && r.num_ != kMin) return small(-r.num_, r.den_);
    return from_mpq(-r.to_mpq());
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (b.num_ == 0) return a;
      if (a.num_ == 0) return b;
      if (a.den_ == b.den_) return from_wide(Wide(a.num_) + b.num_, a.den_);
      return from_wide(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
    }
    return from_mpq(a.to_mpq() + b.to_mpq());
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (b.num_ == 0) return a;
      if (a.den_ == b.den_) return from_wide(Wide(a.num_) - b.num_, a.den_);
      return from_wide(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
    }
    return from_mpq(a.to_mpq() - b.to_mpq());
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0 || b.num_ == 0) return Rational();
      if (a.den_ == 1 && b.den_ == 1) return from_wide(Wide(a.num_) * b.num_, 1);
      return from_wide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
    }
    return from_mpq(a.to_mpq() * b.to_mpq());
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (sgn(b) == 0) throw arithmetic_error("division by zero");
    if (!a.big_ && !b.big_) return from_wide(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
    return from_mpq(a.to_mpq() / b.to_mpq());
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    // Canonical forms: a small value is never stored big.
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      const Wide l = Wide(a.num_) * b.den_;
      const Wide r = Wide(b.num_) * a.den_;
      return l <=> r;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.get_str(); }

 private:
  using Wide = __int128;
  static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
  static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

  static Rational small(std::int64_t n, std::int64_t d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    return r;
  }

  static unsigned __int128 gcd_wide(unsigned __int128 x, unsigned __int128 y) {
    while (y != 0) {
      const auto t = x % y;
      x = y;
      y = t;
    }
    return x;
  }

  static void set_mpz(mpz_class& z, Wide v) {
    const bool neg = v < 0;
    unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    const auto hi = static_cast<unsigned long>(m >> 64);
    const auto lo = static_cast<unsigned long>(m);
    z = hi;
    z <<= 64;
    z += lo;
    if (neg) z = -z;
  }

  // n/d with |n|, |d| below 2^126 (products of two int64 values).
  static Rational from_wide(Wide n, Wide d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) return Rational();
    if (d != 1) {
      const unsigned __int128 un = n < 0 ? -static_cast<unsigned __int128>(n) : static_cast<unsigned __int128>(n);
      const auto g = gcd_wide(un, static_cast<unsigned __int128>(d));
      if (g != 1) {
        n /= static_cast<Wide>(g);
        d /= static_cast<Wide>(g);
      }
    }
    if (n > kMin && n <= kMax && d <= kMax) return small(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    mpq_class q;
    set_mpz(q.get_num(), n);
    set_mpz(q.get_den(), d);
    Rational r;
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
  }

  // q must be canonical.
  static Rational from_mpq(mpq_class q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != kMin) return small(n.get_si(), d.get_si());
    Rational r;
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace blocksuper
