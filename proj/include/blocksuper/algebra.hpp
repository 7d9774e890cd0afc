#pragma once

// The Block-type Lie superalgebras S(q).
//
// Even basis L_{m,i} (m integer, i >= 0) and odd basis G_{l,j} (l in s + Z,
// j >= 0) with
//
//   [L_{m,i}, L_{n,j}] = (n(i+q) - m(j+q)) L_{m+n,i+j}
//   [L_{m,i}, G_{l,j}] = (l(i+q) - m(j+q/2)) G_{m+l,i+j}
//   [G_{l,i}, G_{r,j}] = 2q L_{l+r,i+j}
//
// s = 0 is the Ramond-Block sector, s = 1/2 the Neveu-Schwarz-Block sector.
// Indices are stored doubled so that half-integers stay integral.

#include <blocksuper/scalar.hpp>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace blocksuper {

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Sector { RB, NSB };
enum class Parity { Even = 0, Odd = 1 };

inline const char* to_string(Sector s) { return s == Sector::RB ? "RB" : "NSB"; }

inline int parity_value(Parity p) { return p == Parity::Even ? 0 : 1; }
inline Parity parity_sum(Parity a, Parity b) {
  return (parity_value(a) + parity_value(b)) % 2 == 0 ? Parity::Even : Parity::Odd;
}

/// One basis symbol L_{m,i} or G_{l,j}. Ordering is the canonical term order:
/// even before odd, then ascending doubled index, then ascending grade.
struct BasisKey {
  Parity parity = Parity::Even;
  long twice_index = 0;
  long grade = 0;

  static BasisKey L(long m, long i) { return {Parity::Even, 2 * m, i}; }
  /// G with a doubled index: G_twice(1, 0) is G_{1/2,0}.
  static BasisKey G_twice(long twice_l, long j) { return {Parity::Odd, twice_l, j}; }
  static BasisKey G(long l, long j) { return {Parity::Odd, 2 * l, j}; }

  bool is_even() const { return parity == Parity::Even; }
  bool is_odd() const { return parity == Parity::Odd; }

  bool valid_in(Sector sector) const {
    if (grade < 0) return false;
    const bool odd_index = (twice_index % 2) != 0;
    if (is_even()) return !odd_index;
    return sector == Sector::RB ? !odd_index : odd_index;
  }

  /// The index m (or l) as an exact rational.
  Scalar index() const { return Scalar::fraction(twice_index, 2); }

  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
  friend bool operator==(const BasisKey&, const BasisKey&) = default;
};

inline std::string describe(const BasisKey& k) {
  std::string idx = (k.twice_index % 2 == 0) ? std::to_string(k.twice_index / 2)
                                             : std::to_string(k.twice_index) + "/2";
  return std::string(k.is_even() ? "L(" : "G(") + idx + "," + std::to_string(k.grade) + ")";
}

/// Finite linear combination of basis keys of one sector.
class AlgebraElement {
 public:
  using Terms = std::map<BasisKey, Scalar>;

  explicit AlgebraElement(Sector sector = Sector::RB) : sector_(sector) {}
  AlgebraElement(Sector sector, const BasisKey& key, Scalar coef = Scalar(1)) : sector_(sector) {
    add_term(key, std::move(coef));
  }

  Sector sector() const { return sector_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const BasisKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar() : it->second;
  }

  std::optional<Parity> parity() const {
    if (terms_.empty()) return std::nullopt;
    const Parity p = terms_.begin()->first.parity;
    for (const auto& [k, c] : terms_)
      if (k.parity != p) return std::nullopt;
    return p;
  }
  bool is_homogeneous() const { return terms_.empty() || parity().has_value(); }

  void add_term(const BasisKey& key, const Scalar& coef) {
    if (!key.valid_in(sector_))
      throw usage_error(describe(key) + " is not a basis element of the " + to_string(sector_) + " sector");
    if (coef.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    require_same_sector(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    require_same_sector(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  AlgebraElement& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(AlgebraElement a, const Scalar& s) { return a *= s; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= Scalar(-1); }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.sector_ == b.sector_ && a.terms_ == b.terms_;
  }

  void require_same_sector(const AlgebraElement& o) const {
    if (o.sector_ != sector_) throw usage_error("elements from different sectors");
  }

 private:
  Sector sector_;
  Terms terms_;
};

/// Parameters of S(q): q nonzero and the sector.
class StructureParams {
 public:
  StructureParams(Scalar q, Sector sector) : q_(std::move(q)), sector_(sector) {
    if (q_.is_zero()) throw usage_error("q must be nonzero");
  }
  const Scalar& q() const { return q_; }
  Sector sector() const { return sector_; }

 private:
  Scalar q_;
  Sector sector_;
};

struct Term {
  Scalar coef;
  BasisKey key;
};

/// Structure-constant rule: the single-term bracket of two basis keys.
using BracketRule = std::optional<Term> (*)(const StructureParams&, const BasisKey&, const BasisKey&);

/// The defining structure constants of S(q).
inline std::optional<Term> block_bracket_rule(const StructureParams& p, const BasisKey& x, const BasisKey& y) {
  const Scalar& q = p.q();
  const BasisKey out{parity_sum(x.parity, y.parity), x.twice_index + y.twice_index, x.grade + y.grade};
  Scalar coef;
  if (x.is_even() && y.is_even()) {
    // (n(i+q) - m(j+q)), with the doubled indices halved at the end.
    coef = (Scalar(y.twice_index) * (Scalar(x.grade) + q) - Scalar(x.twice_index) * (Scalar(y.grade) + q)) *
           Scalar::fraction(1, 2);
  } else if (x.is_even() && y.is_odd()) {
    coef = (Scalar(y.twice_index) * (Scalar(x.grade) + q) -
            Scalar(x.twice_index) * (Scalar(y.grade) + q * Scalar::fraction(1, 2))) *
           Scalar::fraction(1, 2);
  } else if (x.is_odd() && y.is_even()) {
    coef = -(Scalar(x.twice_index) * (Scalar(y.grade) + q) -
             Scalar(y.twice_index) * (Scalar(x.grade) + q * Scalar::fraction(1, 2))) *
           Scalar::fraction(1, 2);
  } else {
    coef = Scalar(2) * q;
  }
  if (coef.is_zero()) return std::nullopt;
  return Term{std::move(coef), out};
}

namespace detail {
inline void require_in_sector(const StructureParams& p, const BasisKey& k) {
  if (!k.valid_in(p.sector()))
    throw usage_error(describe(k) + " is not a basis element of the " + to_string(p.sector()) + " sector");
}
}  // namespace detail

inline AlgebraElement bracket_basis(const StructureParams& p, const BasisKey& x, const BasisKey& y,
                                    BracketRule rule = block_bracket_rule) {
  detail::require_in_sector(p, x);
  detail::require_in_sector(p, y);
  AlgebraElement out(p.sector());
  if (auto t = rule(p, x, y)) out.add_term(t->key, t->coef);
  return out;
}

/// Bilinear extension of the basis bracket. Mixed-parity inputs are handled
/// componentwise.
inline AlgebraElement bracket(const StructureParams& p, const AlgebraElement& x, const AlgebraElement& y,
                              BracketRule rule = block_bracket_rule) {
  if (x.sector() != p.sector() || y.sector() != p.sector())
    throw usage_error("bracket arguments must lie in the " + std::string(to_string(p.sector())) + " sector");
  AlgebraElement out(p.sector());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms())
      if (auto t = rule(p, kx, ky)) out.add_term(t->key, cx * cy * t->coef);
  return out;
}

inline int super_sign(Parity a, Parity b) { return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1; }

/// (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]].
inline AlgebraElement super_jacobi_defect(const StructureParams& p, const BasisKey& x, const BasisKey& y,
                                          const BasisKey& z, BracketRule rule = block_bracket_rule) {
  detail::require_in_sector(p, x);
  detail::require_in_sector(p, y);
  detail::require_in_sector(p, z);
  auto nested = [&](const BasisKey& a, const BasisKey& b, const BasisKey& c) -> std::optional<Term> {
    auto inner = rule(p, b, c);
    if (!inner) return std::nullopt;
    auto outer = rule(p, a, inner->key);
    if (!outer) return std::nullopt;
    return Term{inner->coef * outer->coef, outer->key};
  };
  AlgebraElement out(p.sector());
  if (auto t = nested(x, y, z)) out.add_term(t->key, Scalar(super_sign(x.parity, z.parity)) * t->coef);
  if (auto t = nested(y, z, x)) out.add_term(t->key, Scalar(super_sign(y.parity, x.parity)) * t->coef);
  if (auto t = nested(z, x, y)) out.add_term(t->key, Scalar(super_sign(z.parity, y.parity)) * t->coef);
  return out;
}

/// The embedding NSB -> RB: L_{m,i} -> 1/2 L_{2m,i}, G_{r,j} -> (1/sqrt2) G_{2r,j}.
inline AlgebraElement tau_embed(const AlgebraElement& x) {
  if (x.sector() != Sector::NSB) throw usage_error("tau_embed expects an NSB element");
  static const Scalar half = Scalar::fraction(1, 2);
  static const Scalar inv_sqrt2 = Scalar(Rational(0), Rational(1, 2));
  AlgebraElement out(Sector::RB);
  for (const auto& [k, c] : x.terms()) {
    const BasisKey image{k.parity, 2 * k.twice_index, k.grade};
    out.add_term(image, c * (k.is_even() ? half : inv_sqrt2));
  }
  return out;
}

inline AlgebraElement tau_embed(const BasisKey& k) { return tau_embed(AlgebraElement(Sector::NSB, k)); }

/// Super-Virasoro generator (1/q) key, defined for grade-0 keys.
inline AlgebraElement svir_rescale(const StructureParams& p, const BasisKey& key) {
  if (key.grade != 0) throw usage_error("svir_rescale needs a grade-0 key, got " + describe(key));
  return AlgebraElement(p.sector(), key, p.q().inverse());
}

struct OddWitness {
  BasisKey first;
  BasisKey second;
  Scalar factor;
};

/// Odd keys g1, g2 and c with c [g1, g2] = target, for an even target.
inline OddWitness odd_generates_even_witness(const StructureParams& p, const BasisKey& target) {
  if (!target.is_even()) throw usage_error("odd_generates_even_witness needs an even target");
  detail::require_in_sector(p, target);
  const Scalar c = (Scalar(2) * p.q()).inverse();
  if (p.sector() == Sector::NSB)
    return {BasisKey::G_twice(target.twice_index - 1, target.grade), BasisKey::G_twice(1, 0), c};
  return {BasisKey::G_twice(target.twice_index, target.grade), BasisKey::G_twice(0, 0), c};
}

}  // namespace blocksuper
