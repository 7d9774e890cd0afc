#pragma once

// Text syntax for scalars, algebra elements, polynomials and module vectors.
//
//   scalar   := sum of atoms  "p/q" | "p" | "r/s*sqrt2" | "sqrt2"     e.g. 1 + 1*sqrt2
//   element  := term (("+"|"-") term)*
//   term     := [coef "*"] atom
//   coef     := rational | rational "*sqrt2" | "sqrt2" | "(" scalar ")"
//   atom     := "L(" int "," uint ")" | "G(" halfint "," uint ")"
//   halfint  := int | int "/2"   (odd numerator)
//   poly     := sum of [coef "*"] var ["^" uint] and constants, var in {u, t, x}
//   vector   := "even:" poly ";" "odd:" poly
//
// Formatting is canonical: element terms are ordered even keys first, then
// by doubled index, then by grade; polynomials are printed by descending
// degree; coefficient 1 is elided and mixed scalars are parenthesized.

#include <blocksuper/algebra.hpp>
#include <blocksuper/modules.hpp>
#include <blocksuper/poly.hpp>
#include <blocksuper/scalar.hpp>

#include <cctype>
#include <climits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace blocksuper {

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Well-formed text that names something invalid (e.g. a half-integer G
/// index in the RB sector).
class semantic_error : public parse_error {
 public:
  using parse_error::parse_error;
};

// ---------------------------------------------------------------------------
// Formatting

inline std::string format_rational(const Rational& r) { return r.get_str(); }

inline std::string format_scalar(const Scalar& s) {
  const Rational& r = s.rational_part();
  const Rational& v = s.surd_part();
  if (sgn(v) == 0) return format_rational(r);
  if (sgn(r) == 0) return format_rational(v) + "*sqrt2";
  return format_rational(r) + (sgn(v) < 0 ? " - " : " + ") + format_rational(Rational(abs(v))) + "*sqrt2";
}

namespace detail {

// Splits a coefficient into a sign and the text that precedes "*atom".
// Returns an empty prefix for coefficient +-1.
inline std::pair<bool, std::string> coefficient_prefix(const Scalar& c) {
  const Rational& r = c.rational_part();
  const Rational& v = c.surd_part();
  if (sgn(v) == 0) {
    const bool neg = sgn(r) < 0;
    Rational mag = abs(r);
    if (mag == 1) return {neg, ""};
    return {neg, format_rational(mag)};
  }
  if (sgn(r) == 0) {
    const bool neg = sgn(v) < 0;
    return {neg, format_rational(Rational(abs(v))) + "*sqrt2"};
  }
  return {false, "(" + format_scalar(c) + ")"};
}

// Joins (coefficient, atom) pairs into "a + b - c" form. An empty atom means
// a bare constant.
template <class Range>
std::string join_terms(const Range& terms) {
  std::string out;
  bool first = true;
  for (const auto& [coef, atom] : terms) {
    auto [neg, prefix] = coefficient_prefix(coef);
    std::string body;
    if (atom.empty())
      body = prefix.empty() ? "1" : prefix;
    else
      body = prefix.empty() ? atom : prefix + "*" + atom;
    if (first)
      out += (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return first ? "0" : out;
}

}  // namespace detail

inline std::string format_key(const BasisKey& k) { return describe(k); }

inline std::string format_element(const AlgebraElement& x) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [k, c] : x.terms()) terms.emplace_back(c, format_key(k));
  return detail::join_terms(terms);
}

inline std::string format_poly(const Poly& p, std::string_view var = "u") {
  std::vector<std::pair<Scalar, std::string>> terms;
  const auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    std::string atom;
    if (k == 1)
      atom = std::string(var);
    else if (k > 1)
      atom = std::string(var) + "^" + std::to_string(k);
    terms.emplace_back(c[k], atom);
  }
  return detail::join_terms(terms);
}

template <class Tag>
std::string format_vector(const SuperVector<Tag>& v) {
  return "even: " + format_poly(v.even) + "; odd: " + format_poly(v.odd);
}

inline std::string format_vector(const PolyVector& v) { return format_poly(v.value); }

inline std::string format_hv(const HvElement& x) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [k, c] : x.terms()) terms.emplace_back(c, describe(k));
  return detail::join_terms(terms);
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool starts_with(std::string_view s) {
    skip_ws();
    return text_.substr(pos_).starts_with(s);
  }
  bool accept(std::string_view s) {
    if (!starts_with(s)) return false;
    pos_ += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  std::size_t pos() {
    skip_ws();
    return pos_;
  }
  std::string_view text() const { return text_; }

  [[noreturn]] void fail(const std::string& msg) { fail_at(msg, pos()); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    std::size_t off = at;
    if (!text_.empty() && off >= text_.size()) off = text_.size() - 1;
    if (text_.empty()) off = 0;
    throw parse_error(msg, off);
  }

  mpz_class digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail_at("expected a digit", start);
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  // unsigned rational "p" or "p/q"
  Rational rational() {
    mpz_class num = digits();
    mpz_class den = 1;
    // "/" followed by a digit; a bare "/" is left for the caller to reject.
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t at = pos();
      den = digits();
      if (den == 0) fail_at("zero denominator", at);
    }
    return Rational(num, den);
  }

  long integer() {
    const std::size_t at = pos();
    bool neg = accept("-");
    if (!neg) accept("+");
    mpz_class v = digits();
    if (neg) v = -v;
    if (!v.fits_slong_p() || abs(v) > LONG_MAX / 4) fail_at("integer out of range", at);
    return v.get_si();
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline bool is_var(char c) { return c == 'u' || c == 't' || c == 'x'; }

// scalar_atom := rational ["*" "sqrt2"] | "sqrt2"
// A trailing "*" that is not followed by sqrt2 is left unconsumed.
inline Scalar scalar_atom(Cursor& cur, bool* consumed_star_for_more = nullptr) {
  if (cur.accept("sqrt2")) return Scalar::sqrt2();
  if (!cur.peek_digit()) cur.fail("expected a number or sqrt2");
  Rational r = cur.rational();
  if (cur.starts_with("*")) {
    const std::size_t save = cur.pos();
    cur.expect("*");
    if (cur.accept("sqrt2")) return Scalar(Rational(0), r);
    // Not a surd: report that a '*' was consumed so the caller continues.
    if (consumed_star_for_more) {
      *consumed_star_for_more = true;
      return Scalar(r);
    }
    cur.fail_at("expected sqrt2 after '*'", save);
  }
  return Scalar(r);
}

inline Scalar scalar_sum(Cursor& cur) {
  bool neg = cur.accept("-");
  if (!neg) cur.accept("+");
  Scalar acc = scalar_atom(cur);
  if (neg) acc = -acc;
  while (true) {
    if (cur.accept("+")) {
      acc += scalar_atom(cur);
    } else if (cur.starts_with("-")) {
      cur.expect("-");
      acc -= scalar_atom(cur);
    } else {
      break;
    }
  }
  return acc;
}

// Optional coefficient followed by "*". Returns {coefficient, had_coefficient}.
// On return the cursor sits at the atom.
inline Scalar coefficient(Cursor& cur) {
  if (cur.accept("(")) {
    Scalar c = scalar_sum(cur);
    cur.expect(")");
    cur.expect("*");
    return c;
  }
  bool star = false;
  Scalar c = scalar_atom(cur, &star);
  if (!star) cur.expect("*");
  return c;
}

inline BasisKey atom(Cursor& cur, Sector sector) {
  const std::size_t start = cur.pos();
  if (cur.accept("L")) {
    cur.expect("(");
    const long m = cur.integer();
    if (cur.starts_with("/")) cur.fail("L index must be an integer");
    cur.expect(",");
    const std::size_t gat = cur.pos();
    if (cur.starts_with("-")) cur.fail_at("grade must be non-negative", gat);
    const long i = cur.integer();
    cur.expect(")");
    return BasisKey::L(m, i);
  }
  if (cur.accept("G")) {
    cur.expect("(");
    const std::size_t iat = cur.pos();
    long twice = 2 * cur.integer();
    if (cur.accept("/")) {
      const std::size_t dat = cur.pos();
      mpz_class den = cur.digits();
      if (den != 2) cur.fail_at("half-integer index must be written k/2", dat);
      twice /= 2;
      if (twice % 2 == 0) cur.fail_at("k/2 index needs odd k", iat);
    }
    cur.expect(",");
    const std::size_t gat = cur.pos();
    if (cur.starts_with("-")) cur.fail_at("grade must be non-negative", gat);
    const long j = cur.integer();
    cur.expect(")");
    BasisKey k = BasisKey::G_twice(twice, j);
    if (!k.valid_in(sector)) {
      const std::string text(cur.text().substr(start, cur.pos() - start));
      throw semantic_error("atom " + text + " is not in the " + std::string(to_string(sector)) + " sector" +
                               (sector == Sector::RB ? " (RB needs an integral G index)"
                                                     : " (NSB needs a half-integral G index)"),
                           start);
    }
    return k;
  }
  cur.fail_at("expected L(...) or G(...)", start);
}

inline Poly poly_term(Cursor& cur) {
  auto var_power = [&](const Scalar& c) {
    const char v = cur.peek();
    if (!is_var(v)) cur.fail("expected u, t or x");
    cur.expect(std::string_view(&v, 1));
    std::size_t k = 1;
    if (cur.accept("^")) {
      mpz_class e = cur.digits();
      if (!e.fits_uint_p() || e > 10000) cur.fail("exponent out of range");
      k = e.get_ui();
    }
    return Poly::monomial(k, c);
  };
  const char c0 = cur.peek();
  if (is_var(c0)) return var_power(Scalar(1));
  if (cur.accept("(")) {
    Scalar c = scalar_sum(cur);
    cur.expect(")");
    if (cur.accept("*")) return var_power(c);
    return Poly(c);
  }
  bool star = false;
  Scalar c = scalar_atom(cur, &star);
  if (star) return var_power(c);
  if (cur.accept("*")) return var_power(c);
  return Poly(c);
}

inline Poly poly_sum(Cursor& cur) {
  bool neg = cur.accept("-");
  if (!neg) cur.accept("+");
  Poly acc = poly_term(cur);
  if (neg) acc = -acc;
  while (true) {
    if (cur.accept("+")) {
      acc += poly_term(cur);
    } else if (cur.starts_with("-")) {
      cur.expect("-");
      acc -= poly_term(cur);
    } else {
      break;
    }
  }
  return acc;
}

inline void expect_end(Cursor& cur) {
  if (!cur.at_end()) cur.fail("unexpected trailing input");
}

}  // namespace detail

inline Scalar parse_scalar(std::string_view text) {
  detail::Cursor cur(text);
  Scalar s;
  if (cur.accept("(")) {
    s = detail::scalar_sum(cur);
    cur.expect(")");
  } else {
    s = detail::scalar_sum(cur);
  }
  detail::expect_end(cur);
  return s;
}

inline AlgebraElement parse_element(std::string_view text, Sector sector) {
  detail::Cursor cur(text);
  AlgebraElement out(sector);
  auto term = [&](bool negate) {
    Scalar c(1);
    const char p = cur.peek();
    if (p != 'L' && p != 'G') c = detail::coefficient(cur);
    BasisKey k = detail::atom(cur, sector);
    out.add_term(k, negate ? -c : c);
  };
  if (cur.peek() == '0') {
    // the zero element
    detail::Cursor probe(text);
    probe.digits();
    if (probe.at_end()) return out;
  }
  bool neg = cur.accept("-");
  if (!neg) cur.accept("+");
  term(neg);
  while (true) {
    if (cur.accept("+"))
      term(false);
    else if (cur.accept("-"))
      term(true);
    else
      break;
  }
  detail::expect_end(cur);
  return out;
}

inline Poly parse_poly(std::string_view text) {
  detail::Cursor cur(text);
  Poly p = detail::poly_sum(cur);
  detail::expect_end(cur);
  return p;
}

template <class Tag>
SuperVector<Tag> parse_vector(std::string_view text) {
  detail::Cursor cur(text);
  SuperVector<Tag> v;
  cur.expect("even");
  cur.expect(":");
  v.even = detail::poly_sum(cur);
  cur.expect(";");
  cur.expect("odd");
  cur.expect(":");
  v.odd = detail::poly_sum(cur);
  detail::expect_end(cur);
  return v;
}

}  // namespace blocksuper
