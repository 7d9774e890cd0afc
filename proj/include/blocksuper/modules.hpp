#pragma once

// Polynomial module families over S(q), the Witt algebra and the
// Heisenberg-Virasoro algebra.
//
// Every module vector is a pair of polynomials in one abstract variable u.
//   Omega_R(lambda, a, b) = C[t^2] + t C[t^2]: even slot f(u) stands for
//     f(t^2), odd slot r(u) stands for t r(t^2).
//   Omega_L(lambda, a, b) = C[t] + C[x]: even slot in t, odd slot in x.
//     Odd generators move a polynomial between slots, renaming the variable.
//   Omega(lambda, a) and Omega(lambda, a, b) = C[t] carry one polynomial.

#include <blocksuper/algebra.hpp>
#include <blocksuper/hv.hpp>
#include <blocksuper/poly.hpp>
#include <blocksuper/scalar.hpp>

#include <utility>

namespace blocksuper {

class ModuleParams {
 public:
  ModuleParams(Sector sector, Scalar lambda, Scalar a, Scalar b, Scalar q)
      : sector_(sector), lambda_(std::move(lambda)), a_(std::move(a)), b_(std::move(b)), q_(std::move(q)) {
    if (lambda_.is_zero()) throw usage_error("lambda must be nonzero");
    if (q_.is_zero()) throw usage_error("q must be nonzero");
    q_is_minus_one_ = (q_ == Scalar(-1));
  }

  Sector sector() const { return sector_; }
  const Scalar& lambda() const { return lambda_; }
  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& q() const { return q_; }
  StructureParams algebra() const { return StructureParams(q_, sector_); }

  /// b only enters the actions through delta_{q,-1}.
  bool b_active() const { return q_is_minus_one_; }

  /// delta_{q,-1} delta_{i,1} b
  Scalar grade_one_term(long grade) const { return (grade == 1 && q_is_minus_one_) ? b_ : Scalar(); }

  friend bool operator==(const ModuleParams&, const ModuleParams&) = default;

 private:
  Sector sector_;
  Scalar lambda_;
  Scalar a_;
  Scalar b_;
  Scalar q_;
  bool q_is_minus_one_ = false;
};

struct RamondSlots {};
struct NeveuSchwarzSlots {};

/// Parity-graded pair of polynomials.
template <class Tag>
struct SuperVector {
  Poly even;
  Poly odd;

  static SuperVector even_part(Poly p) { return {std::move(p), Poly()}; }
  static SuperVector odd_part(Poly p) { return {Poly(), std::move(p)}; }

  bool is_zero() const { return even.is_zero() && odd.is_zero(); }
  int degree() const { return std::max(even.degree(), odd.degree()); }

  SuperVector& operator+=(const SuperVector& o) {
    even += o.even;
    odd += o.odd;
    return *this;
  }
  SuperVector& operator-=(const SuperVector& o) {
    even -= o.even;
    odd -= o.odd;
    return *this;
  }
  SuperVector& operator*=(const Scalar& c) {
    even *= c;
    odd *= c;
    return *this;
  }
  friend SuperVector operator+(SuperVector a, const SuperVector& b) { return a += b; }
  friend SuperVector operator-(SuperVector a, const SuperVector& b) { return a -= b; }
  friend SuperVector operator*(const Scalar& c, SuperVector a) { return a *= c; }
  friend SuperVector operator*(SuperVector a, const Scalar& c) { return a *= c; }
  friend bool operator==(const SuperVector&, const SuperVector&) = default;
};

using SuperVectorR = SuperVector<RamondSlots>;
using SuperVectorL = SuperVector<NeveuSchwarzSlots>;

struct PolyVector {
  Poly value;

  bool is_zero() const { return value.is_zero(); }
  int degree() const { return value.degree(); }
  PolyVector& operator+=(const PolyVector& o) {
    value += o.value;
    return *this;
  }
  PolyVector& operator-=(const PolyVector& o) {
    value -= o.value;
    return *this;
  }
  PolyVector& operator*=(const Scalar& c) {
    value *= c;
    return *this;
  }
  friend PolyVector operator+(PolyVector a, const PolyVector& b) { return a += b; }
  friend PolyVector operator-(PolyVector a, const PolyVector& b) { return a -= b; }
  friend PolyVector operator*(const Scalar& c, PolyVector a) { return a *= c; }
  friend bool operator==(const PolyVector&, const PolyVector&) = default;
};

namespace detail {

// scale * (c1 u + c0) * p(u)
inline Poly linear_times(const Scalar& scale, const Scalar& c1, const Scalar& c0, const Poly& p) {
  if (p.is_zero() || scale.is_zero()) return Poly();
  const auto c = p.coeffs();
  std::vector<Scalar> out(c.size() + 1);
  const Scalar s1 = scale * c1;
  const Scalar s0 = scale * c0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!s0.is_zero()) out[k] += s0 * c[k];
    if (!s1.is_zero()) out[k + 1] += s1 * c[k];
  }
  return Poly(std::move(out));
}

inline void require_sector(const ModuleParams& p, Sector s, const char* family) {
  if (p.sector() != s)
    throw usage_error(std::string(family) + " needs " + to_string(s) + " parameters, got " + to_string(p.sector()));
}

}  // namespace detail

/// Action of one RB basis key on Omega_R(lambda, a, b).
inline SuperVectorR act_R(const ModuleParams& p, const BasisKey& key, const SuperVectorR& v) {
  detail::require_sector(p, Sector::RB, "Omega_R");
  if (!key.valid_in(Sector::RB)) throw usage_error(describe(key) + " is not an RB basis element");
  const long i = key.grade;
  const Scalar d = p.grade_one_term(i);
  SuperVectorR out;
  if (i != 0 && d.is_zero()) return out;
  const long m = key.twice_index / 2;
  const Scalar mq = Scalar(m) * p.q();
  const Scalar lam = pow(p.lambda(), m);
  const Scalar delta = i == 0 ? Scalar(1) : Scalar();
  const Scalar mqa = mq * p.a();
  if (key.is_even()) {
    // L_{m,i} f(t^2) = lambda^m (delta_{i,0}(t^2 - mqa) + d_i) f(t^2 - mq)
    if (!v.even.is_zero()) out.even = detail::linear_times(lam, delta, d - delta * mqa, shift(v.even, -mq));
    // L_{m,i} t f(t^2) = lambda^m t (delta_{i,0}(t^2 - mqa - mq/2) + d_i) f(t^2 - mq)
    if (!v.odd.is_zero())
      out.odd = detail::linear_times(lam, delta, d - delta * (mqa + mq * Scalar::fraction(1, 2)), shift(v.odd, -mq));
  } else {
    // G_{m,i} f(t^2) = lambda^m delta_{i,0} t f(t^2 - mq)
    if (!v.even.is_zero() && i == 0) out.odd = shift(v.even, -mq) * lam;
    // G_{m,i} t f(t^2) = q lambda^m (delta_{i,0}(t^2 - 2mqa) + 2 d_i) f(t^2 - mq)
    if (!v.odd.is_zero())
      out.even = detail::linear_times(p.q() * lam, delta, Scalar(2) * (d - delta * mqa), shift(v.odd, -mq));
  }
  return out;
}

/// Action of one NSB basis key on Omega_L(lambda, a, b).
inline SuperVectorL act_L(const ModuleParams& p, const BasisKey& key, const SuperVectorL& v) {
  detail::require_sector(p, Sector::NSB, "Omega_L");
  if (!key.valid_in(Sector::NSB)) throw usage_error(describe(key) + " is not an NSB basis element");
  const long i = key.grade;
  const Scalar d = p.grade_one_term(i);
  SuperVectorL out;
  if (i != 0 && d.is_zero()) return out;
  const Scalar delta = i == 0 ? Scalar(1) : Scalar();
  const Scalar m = key.index();
  const Scalar mq = m * p.q();
  const Scalar mqa = mq * p.a();
  if (key.is_even()) {
    const Scalar lam = pow(p.lambda(), key.twice_index / 2);
    // L_{m,i} f(t) = lambda^m (delta_{i,0}(t - mqa) + d_i) f(t - mq)
    if (!v.even.is_zero()) out.even = detail::linear_times(lam, delta, d - delta * mqa, shift(v.even, -mq));
    // L_{m,i} g(x) = lambda^m (delta_{i,0}(x - mqa - mq/2) + d_i) g(x - mq)
    if (!v.odd.is_zero())
      out.odd = detail::linear_times(lam, delta, d - delta * (mqa + mq * Scalar::fraction(1, 2)), shift(v.odd, -mq));
  } else {
    // r - 1/2 and r + 1/2 are integers for r in 1/2 + Z.
    const long down = (key.twice_index - 1) / 2;
    const long up = (key.twice_index + 1) / 2;
    // G_{r,i} f(t) = lambda^{r-1/2} delta_{i,0} f(x - rq)
    if (!v.even.is_zero() && i == 0) out.odd = shift(v.even, -mq) * pow(p.lambda(), down);
    // G_{r,i} g(x) = q lambda^{r+1/2} (delta_{i,0}(t - 2rqa) + 2 d_i) g(t - rq)
    if (!v.odd.is_zero())
      out.even = detail::linear_times(p.q() * pow(p.lambda(), up), delta, Scalar(2) * (d - delta * mqa),
                                      shift(v.odd, -mq));
  }
  return out;
}

/// Witt action L_alpha f(t) = lambda^alpha (t - alpha a) f(t - alpha).
inline PolyVector act_W(const Scalar& lambda, const Scalar& a, long alpha, const PolyVector& v) {
  if (lambda.is_zero()) throw usage_error("lambda must be nonzero");
  const Scalar al(alpha);
  return {detail::linear_times(pow(lambda, alpha), Scalar(1), -(al * a), shift(v.value, -al))};
}

/// Heisenberg-Virasoro action: L_alpha as in act_W, I_alpha f = b lambda^alpha f(t - alpha), C_j f = 0.
inline PolyVector act_H(const Scalar& lambda, const Scalar& a, const Scalar& b, const HvKey& gen,
                        const PolyVector& v) {
  if (lambda.is_zero()) throw usage_error("lambda must be nonzero");
  switch (gen.kind) {
    case HvKind::L: return act_W(lambda, a, gen.index, v);
    case HvKind::I: return {shift(v.value, Scalar(-gen.index)) * (b * pow(lambda, gen.index))};
    default: return {};
  }
}

// Module-family adapters. Each exposes the same surface so that generic
// checks (module axioms, closure, invariants) are written once.

class OmegaR {
 public:
  using key_type = BasisKey;
  using element_type = AlgebraElement;
  using vector_type = SuperVectorR;

  explicit OmegaR(ModuleParams p, BracketRule rule = block_bracket_rule) : p_(std::move(p)), rule_(rule) {
    detail::require_sector(p_, Sector::RB, "Omega_R");
  }

  const ModuleParams& params() const { return p_; }
  Sector sector() const { return Sector::RB; }
  static Parity parity(const BasisKey& k) { return k.parity; }

  vector_type act(const BasisKey& k, const vector_type& v) const { return act_R(p_, k, v); }
  vector_type act(const AlgebraElement& x, const vector_type& v) const {
    vector_type out;
    for (const auto& [k, c] : x.terms()) out += c * act_R(p_, k, v);
    return out;
  }
  AlgebraElement bracket(const BasisKey& x, const BasisKey& y) const { return bracket_basis(p_.algebra(), x, y, rule_); }

 private:
  ModuleParams p_;
  BracketRule rule_;
};

class OmegaL {
 public:
  using key_type = BasisKey;
  using element_type = AlgebraElement;
  using vector_type = SuperVectorL;

  explicit OmegaL(ModuleParams p, BracketRule rule = block_bracket_rule) : p_(std::move(p)), rule_(rule) {
    detail::require_sector(p_, Sector::NSB, "Omega_L");
  }

  const ModuleParams& params() const { return p_; }
  Sector sector() const { return Sector::NSB; }
  static Parity parity(const BasisKey& k) { return k.parity; }

  vector_type act(const BasisKey& k, const vector_type& v) const { return act_L(p_, k, v); }
  vector_type act(const AlgebraElement& x, const vector_type& v) const {
    vector_type out;
    for (const auto& [k, c] : x.terms()) out += c * act_L(p_, k, v);
    return out;
  }
  AlgebraElement bracket(const BasisKey& x, const BasisKey& y) const { return bracket_basis(p_.algebra(), x, y, rule_); }

 private:
  ModuleParams p_;
  BracketRule rule_;
};

/// Omega(lambda, a) over the Witt algebra.
class WittModule {
 public:
  using key_type = HvKey;
  using element_type = HvElement;
  using vector_type = PolyVector;

  WittModule(Scalar lambda, Scalar a) : lambda_(std::move(lambda)), a_(std::move(a)) {
    if (lambda_.is_zero()) throw usage_error("lambda must be nonzero");
  }
  static Parity parity(const HvKey&) { return Parity::Even; }

  vector_type act(const HvKey& k, const vector_type& v) const {
    if (k.kind != HvKind::L) throw usage_error("the Witt module only carries L generators, got " + describe(k));
    return act_W(lambda_, a_, k.index, v);
  }
  vector_type act(const HvElement& x, const vector_type& v) const {
    vector_type out;
    for (const auto& [k, c] : x.terms()) out += c * act(k, v);
    return out;
  }
  HvElement bracket(const HvKey& x, const HvKey& y) const { return witt_bracket(x, y); }

 private:
  Scalar lambda_;
  Scalar a_;
};

/// Omega(lambda, a, b) over the Heisenberg-Virasoro algebra.
class HvModule {
 public:
  using key_type = HvKey;
  using element_type = HvElement;
  using vector_type = PolyVector;

  HvModule(Scalar lambda, Scalar a, Scalar b) : lambda_(std::move(lambda)), a_(std::move(a)), b_(std::move(b)) {
    if (lambda_.is_zero()) throw usage_error("lambda must be nonzero");
  }
  static Parity parity(const HvKey&) { return Parity::Even; }

  vector_type act(const HvKey& k, const vector_type& v) const { return act_H(lambda_, a_, b_, k, v); }
  vector_type act(const HvElement& x, const vector_type& v) const {
    vector_type out;
    for (const auto& [k, c] : x.terms()) out += c * act(k, v);
    return out;
  }
  HvElement bracket(const HvKey& x, const HvKey& y) const { return hv_bracket(x, y); }

 private:
  Scalar lambda_;
  Scalar a_;
  Scalar b_;
};

/// [x,y] v - x (y v) + (-1)^{|x||y|} y (x v); zero for a genuine module.
template <class Module>
typename Module::vector_type module_axiom_defect(const Module& mod, const typename Module::key_type& x,
                                                 const typename Module::key_type& y,
                                                 const typename Module::vector_type& v) {
  auto out = mod.act(mod.bracket(x, y), v);
  out -= mod.act(x, mod.act(y, v));
  const auto yx = mod.act(y, mod.act(x, v));
  if (super_sign(Module::parity(x), Module::parity(y)) > 0)
    out += yx;
  else
    out -= yx;
  return out;
}

struct PhiImage {
  ModuleParams params;
  SuperVectorR vector;
};

/// The isomorphism Omega_L(lambda, a, b) -> Omega_R(sigma, a, 2b) with
/// sigma^2 = lambda: f(t) -> f(t^2/2), g(x) -> (sigma/sqrt2) t g(t^2/2).
inline PhiImage phi_map(const ModuleParams& params_l, const Scalar& sigma, const SuperVectorL& v) {
  detail::require_sector(params_l, Sector::NSB, "phi_map");
  if (!(sigma * sigma == params_l.lambda())) throw usage_error("phi_map needs sigma^2 = lambda");
  ModuleParams params_r(Sector::RB, sigma, params_l.a(), Scalar(2) * params_l.b(), params_l.q());
  static const Scalar half = Scalar::fraction(1, 2);
  const Scalar odd_factor = sigma * Scalar(Rational(0), Rational(1, 2));  // sigma / sqrt2
  SuperVectorR image{compose_affine(v.even, half, Scalar()), compose_affine(v.odd, half, Scalar()) * odd_factor};
  return {std::move(params_r), std::move(image)};
}

}  // namespace blocksuper
