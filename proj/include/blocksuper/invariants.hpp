#pragma once

// Isomorphism invariants (lambda, a, b) read off the action on the even
// constant vector: L_{1,0} 1 = lambda (u - q a) and, at q = -1,
// L_{1,1} 1 = lambda b.

#include <blocksuper/algebra.hpp>
#include <blocksuper/modules.hpp>

#include <optional>
#include <stdexcept>

namespace blocksuper {

class malformed_action_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModuleInvariants {
  Scalar lambda;
  Scalar a;
  std::optional<Scalar> b;  // nullopt: b is inert (q != -1)

  friend bool operator==(const ModuleInvariants&, const ModuleInvariants&) = default;
};

/// Reads the invariants from an action oracle act(key, vector) -> vector.
template <class Vec, class Oracle>
ModuleInvariants extract_invariants(const Oracle& act, const Scalar& q) {
  if (q.is_zero()) throw usage_error("q must be nonzero");
  const Vec one = Vec::even_part(Poly(1));
  const Vec l10 = act(BasisKey::L(1, 0), one);
  if (!l10.odd.is_zero() || l10.even.degree() != 1)
    throw malformed_action_error("L(1,0) applied to 1 is not a degree-1 even vector");
  const Scalar& lambda = l10.even.coeff(1);
  if (lambda.is_zero()) throw malformed_action_error("L(1,0) applied to 1 has zero degree-1 coefficient");
  ModuleInvariants inv{lambda, -l10.even.coeff(0) / (lambda * q), std::nullopt};
  if (q == Scalar(-1)) {
    const Vec l11 = act(BasisKey::L(1, 1), one);
    if (!l11.odd.is_zero() || l11.even.degree() > 0)
      throw malformed_action_error("L(1,1) applied to 1 is not an even constant");
    inv.b = l11.even.coeff(0) / lambda;
  }
  return inv;
}

template <class Module>
ModuleInvariants extract_invariants(const Module& mod) {
  using Vec = typename Module::vector_type;
  return extract_invariants<Vec>([&](const BasisKey& k, const Vec& v) { return mod.act(k, v); }, mod.params().q());
}

/// Modules over the same S(q) are isomorphic iff their invariants agree;
/// b is compared only where it is active.
inline bool declared_isomorphic(const ModuleInvariants& x, const ModuleInvariants& y) {
  return x.lambda == y.lambda && x.a == y.a && x.b == y.b;
}

}  // namespace blocksuper
