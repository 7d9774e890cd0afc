#pragma once

// The Witt algebra and the Heisenberg-Virasoro algebra:
//
//   [L_a, L_b] = (b - a) L_{a+b} + delta_{a+b,0} (a^3 - a)/12 C1
//   [L_a, I_b] = b I_{a+b} + delta_{a+b,0} (a^2 + a) C2
//   [I_a, I_b] = a delta_{a+b,0} C3
//
// The Witt algebra is the span of the L_a with the central term dropped.

#include <blocksuper/algebra.hpp>
#include <blocksuper/scalar.hpp>

#include <compare>
#include <map>
#include <string>

namespace blocksuper {

enum class HvKind { L = 0, I = 1, C1 = 2, C2 = 3, C3 = 4 };

struct HvKey {
  HvKind kind = HvKind::L;
  long index = 0;  // unused (zero) for central generators

  static HvKey L(long a) { return {HvKind::L, a}; }
  static HvKey I(long a) { return {HvKind::I, a}; }
  /// Central generator C_j, j in {1, 2, 3}.
  static HvKey C(int j) {
    if (j < 1 || j > 3) throw usage_error("central generators are C1, C2, C3");
    return {static_cast<HvKind>(1 + j), 0};
  }

  bool is_central() const { return kind == HvKind::C1 || kind == HvKind::C2 || kind == HvKind::C3; }

  friend auto operator<=>(const HvKey&, const HvKey&) = default;
  friend bool operator==(const HvKey&, const HvKey&) = default;
};

inline std::string describe(const HvKey& k) {
  switch (k.kind) {
    case HvKind::L: return "L_" + std::to_string(k.index);
    case HvKind::I: return "I_" + std::to_string(k.index);
    case HvKind::C1: return "C1";
    case HvKind::C2: return "C2";
    case HvKind::C3: return "C3";
  }
  return "?";
}

class HvElement {
 public:
  using Terms = std::map<HvKey, Scalar>;

  HvElement() = default;
  explicit HvElement(const HvKey& k, Scalar c = Scalar(1)) { add_term(k, std::move(c)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const HvKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const HvElement&, const HvElement&) = default;

 private:
  Terms terms_;
};

/// Heisenberg-Virasoro bracket of two generators, central terms included.
inline HvElement hv_bracket(const HvKey& x, const HvKey& y) {
  HvElement out;
  if (x.is_central() || y.is_central()) return out;
  const long a = x.index;
  const long b = y.index;
  const bool central_slot = (a + b == 0);
  if (x.kind == HvKind::L && y.kind == HvKind::L) {
    out.add_term(HvKey::L(a + b), Scalar(b - a));
    if (central_slot) out.add_term(HvKey{HvKind::C1, 0}, Scalar::fraction(a * a * a - a, 12));
  } else if (x.kind == HvKind::L && y.kind == HvKind::I) {
    out.add_term(HvKey::I(a + b), Scalar(b));
    if (central_slot) out.add_term(HvKey{HvKind::C2, 0}, Scalar(a * a + a));
  } else if (x.kind == HvKind::I && y.kind == HvKind::L) {
    // [I_a, L_b] = -[L_b, I_a]
    out.add_term(HvKey::I(a + b), Scalar(-a));
    if (central_slot) out.add_term(HvKey{HvKind::C2, 0}, Scalar(-(b * b + b)));
  } else {
    if (central_slot) out.add_term(HvKey{HvKind::C3, 0}, Scalar(a));
  }
  return out;
}

/// Witt bracket [L_a, L_b] = (b - a) L_{a+b}.
inline HvElement witt_bracket(const HvKey& x, const HvKey& y) {
  if (x.kind != HvKind::L || y.kind != HvKind::L) throw usage_error("the Witt algebra only has L generators");
  return HvElement(HvKey::L(x.index + y.index), Scalar(y.index - x.index));
}

}  // namespace blocksuper
