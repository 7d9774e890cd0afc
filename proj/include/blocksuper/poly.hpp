#pragma once

// Dense univariate polynomials over Q(sqrt2).

#include <blocksuper/scalar.hpp>

#include <algorithm>
#include <climits>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace blocksuper {

class Poly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = INT_MIN;

  Poly() = default;
  Poly(Scalar c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
  }
  Poly(int c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly monomial(std::size_t k, Scalar c = Scalar(1)) {
    if (c.is_zero()) return Poly();
    std::vector<Scalar> v(k + 1);
    v[k] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly variable() { return monomial(1); }
  /// c1*u + c0
  static Poly linear(Scalar c1, Scalar c0) { return Poly(std::vector<Scalar>{std::move(c0), std::move(c1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return is_zero() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Scalar> coeffs() const { return coeffs_; }

  const Scalar& coeff(std::size_t k) const {
    static const Scalar zero;
    return k < coeffs_.size() ? coeffs_[k] : zero;
  }
  const Scalar& leading() const { return coeffs_.back(); }

  Scalar evaluate(const Scalar& x) const {
    Scalar acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    if (c.is_one()) return *this;
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Exact division. Returns {quotient, remainder}; throws on a zero divisor.
  friend std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw arithmetic_error("polynomial division by zero");
    if (num.degree() < den.degree()) return {Poly(), num};
    std::vector<Scalar> rem(num.coeffs_);
    std::vector<Scalar> quo(num.coeffs_.size() - den.coeffs_.size() + 1);
    const Scalar lead_inv = den.leading().inverse();
    for (std::size_t k = quo.size(); k-- > 0;) {
      Scalar c = rem[k + den.coeffs_.size() - 1] * lead_inv;
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < den.coeffs_.size(); ++j) rem[k + j] -= c * den.coeffs_[j];
      quo[k] = std::move(c);
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

/// p(alpha*u + beta) by Horner expansion. Shifts f(u - m q) use alpha = 1.
inline Poly compose_affine(const Poly& p, const Scalar& alpha, const Scalar& beta) {
  if (p.degree() <= 0) return p;
  const auto c = p.coeffs();
  if (beta.is_zero()) {
    std::vector<Scalar> out(c.begin(), c.end());
    Scalar power(1);
    for (std::size_t k = 1; k < out.size(); ++k) {
      power *= alpha;
      out[k] *= power;
    }
    return Poly(std::move(out));
  }
  // Horner: acc = acc * (alpha u + beta) + c_k, in place on a dense buffer.
  const bool unit = alpha.is_one();
  std::vector<Scalar> acc(c.size());
  std::size_t len = 0;
  for (std::size_t k = c.size(); k-- > 0;) {
    // acc <- acc * (alpha u + beta)
    if (len > 0) {
      acc[len] = unit ? acc[len - 1] : acc[len - 1] * alpha;
      for (std::size_t j = len - 1; j > 0; --j) {
        acc[j] *= beta;
        acc[j] += unit ? acc[j - 1] : acc[j - 1] * alpha;
      }
      acc[0] *= beta;
      ++len;
    } else {
      len = 1;
      acc[0] = Scalar();
    }
    acc[0] += c[k];
  }
  return Poly(std::move(acc));
}

/// Shift u -> u + beta.
inline Poly shift(const Poly& p, const Scalar& beta) { return compose_affine(p, Scalar(1), beta); }

}  // namespace blocksuper
