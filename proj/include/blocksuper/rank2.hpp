#pragma once

// Rank-2 base-point constraints over the Neveu-Schwarz-Block algebra.
//
// With G_{1/2,0} 1_even = f(x) 1_odd, G_{1/2,1} 1_even = g(x) 1_odd,
// G_{1/2,0} 1_odd = h(t) 1_even, G_{1/2,1} 1_odd = h~(t) 1_even and the even
// actions fixed by (lambda, a, b) and (mu, c, d), the bracket relations force
//
//   f(t - q/2) h(t)                      = q lambda (t - q a)
//   h(x - q/2) f(x)                      = q mu (x - q c)
//   g(t - q/2) h(t) + f(t - q/2) h~(t)   = 2 q lambda delta_{q,-1} b
//   h~(x - q/2) f(x) + h(x - q/2) g(x)   = 2 q mu delta_{q,-1} d
//   g(t - q/2) h~(t)                     = 0
//
// Degrees force deg f + deg h = 1, which leaves two one-parameter families.

#include <blocksuper/modules.hpp>
#include <blocksuper/poly.hpp>

#include <array>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace blocksuper {

enum class Rank2Case { CPlus, CMinus };

inline const char* to_string(Rank2Case c) { return c == Rank2Case::CPlus ? "c_plus" : "c_minus"; }

struct Rank2Solution {
  Rank2Case kind = Rank2Case::CPlus;
  Scalar c;  // a + 1/2 or a - 1/2
  Scalar e;
  Poly f, g;        // in x
  Poly h, h_tilde;  // in t
  Scalar lambda, a, b, q;
  Scalar mu, d;  // forced: mu = lambda, d = b
};

inline std::array<Rank2Solution, 2> rank2_solve(const Scalar& q, const Scalar& lambda, const Scalar& a,
                                                const Scalar& b, const Scalar& e) {
  if (q.is_zero() || lambda.is_zero() || e.is_zero()) throw usage_error("rank2_solve needs q, lambda, e nonzero");
  const Scalar half = Scalar::fraction(1, 2);
  const Scalar db = q == Scalar(-1) ? b : Scalar();
  const Scalar ql_over_e = q * lambda / e;
  const Scalar twisted = Scalar(2) * ql_over_e * db;

  Rank2Solution plus{Rank2Case::CPlus, a + half, e, Poly(e), Poly(), Poly::linear(ql_over_e, -(ql_over_e * q * a)),
                     Poly(twisted), lambda, a, b, q, lambda, b};
  // f(x) = (q/e) lambda (x - qa + q/2)
  Rank2Solution minus{Rank2Case::CMinus, a - half, e, Poly::linear(ql_over_e, ql_over_e * (q * half - q * a)),
                      Poly(twisted), Poly(e), Poly(), lambda, a, b, q, lambda, b};
  return {std::move(plus), std::move(minus)};
}

/// Left-hand side minus right-hand side of each constraint; all zero for a solution.
struct Rank2Residuals {
  Poly product_even;  // f(t - q/2) h(t) - q lambda (t - q a)
  Poly product_odd;   // h(x - q/2) f(x) - q mu (x - q c)
  Poly mixed_even;
  Poly mixed_odd;
  Poly grade_two;

  bool all_zero() const {
    return product_even.is_zero() && product_odd.is_zero() && mixed_even.is_zero() && mixed_odd.is_zero() &&
           grade_two.is_zero();
  }
};

inline Rank2Residuals rank2_residuals(const Rank2Solution& s) {
  const Scalar back = -(s.q * Scalar::fraction(1, 2));  // u -> u - q/2
  const Scalar active = s.q == Scalar(-1) ? Scalar(1) : Scalar();
  Rank2Residuals r;
  r.product_even = shift(s.f, back) * s.h - Poly::linear(s.q * s.lambda, -(s.q * s.lambda * s.q * s.a));
  r.product_odd = shift(s.h, back) * s.f - Poly::linear(s.q * s.mu, -(s.q * s.mu * s.q * s.c));
  r.mixed_even = shift(s.g, back) * s.h + shift(s.f, back) * s.h_tilde - Poly(Scalar(2) * s.q * s.lambda * active * s.b);
  r.mixed_odd = shift(s.h_tilde, back) * s.f + shift(s.h, back) * s.g - Poly(Scalar(2) * s.q * s.mu * active * s.d);
  r.grade_two = shift(s.g, back) * s.h_tilde;
  return r;
}

struct Rank2BruteforceReport {
  std::size_t candidates = 0;
  std::size_t solutions = 0;
  std::size_t outside_families = 0;  // solutions matching neither family
  std::set<Rank2Case> families;
  std::set<std::pair<int, int>> degree_pairs;  // (deg f, deg h) of the solutions found

  bool exactly_two_families() const {
    return outside_families == 0 && families.size() == 2 && solutions > 0;
  }
};

namespace detail {

// Every nonzero polynomial of degree <= max_deg with coefficients from `values`.
inline void enumerate_polys(const std::vector<Scalar>& values, int max_deg, std::vector<Poly>& out) {
  std::vector<std::size_t> digits(static_cast<std::size_t>(max_deg) + 1, 0);
  while (true) {
    std::vector<Scalar> c;
    c.reserve(digits.size());
    for (auto d : digits) c.push_back(values[d]);
    Poly p(std::move(c));
    if (!p.is_zero()) out.push_back(std::move(p));
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == values.size()) digits[k++] = 0;
    if (k == digits.size()) break;
  }
}

}  // namespace detail

/// Independent check of the solver: enumerate one factor over a small
/// coefficient ansatz, solve the (linear) constraint for the other by exact
/// division, and classify every solution against the two families.
inline Rank2BruteforceReport rank2_bruteforce_check(const Scalar& q, const Scalar& lambda, const Scalar& a,
                                                    const Scalar& b, int max_deg) {
  if (max_deg < 1) throw usage_error("rank2_bruteforce_check needs max_deg >= 1");
  const Scalar back = -(q * Scalar::fraction(1, 2));
  const Poly target = Poly::linear(q * lambda, -(q * lambda * q * a));  // q lambda (t - q a)
  const std::vector<Scalar> ansatz{Scalar(0),  Scalar(1),  Scalar(-1), Scalar(2), Scalar(-2),
                                   Scalar::fraction(1, 2), Scalar::fraction(-1, 2)};
  std::vector<Poly> candidates;
  detail::enumerate_polys(ansatz, max_deg, candidates);

  Rank2BruteforceReport rep;
  auto classify = [&](const Poly& f, const Poly& h) {
    ++rep.solutions;
    rep.degree_pairs.emplace(f.degree(), h.degree());
    bool matched = false;
    if (f.degree() == 0) {
      const auto sols = rank2_solve(q, lambda, a, b, f.coeff(0));
      if (sols[0].f == f && sols[0].h == h) {
        rep.families.insert(Rank2Case::CPlus);
        matched = true;
      }
    }
    if (!matched && h.degree() == 0) {
      const auto sols = rank2_solve(q, lambda, a, b, h.coeff(0));
      if (sols[1].f == f && sols[1].h == h) {
        rep.families.insert(Rank2Case::CMinus);
        matched = true;
      }
    }
    if (!matched) ++rep.outside_families;
  };

  // f from the ansatz; h = target / f(t - q/2) when the division is exact.
  for (const Poly& f : candidates) {
    ++rep.candidates;
    auto [h, rem] = divmod(target, shift(f, back));
    if (rem.is_zero() && !h.is_zero() && h.degree() <= max_deg) classify(f, h);
  }
  // h from the ansatz; f(t - q/2) = target / h, then undo the shift.
  for (const Poly& h : candidates) {
    ++rep.candidates;
    auto [fs, rem] = divmod(target, h);
    if (!rem.is_zero() || fs.is_zero()) continue;
    Poly f = shift(fs, -back);
    if (f.degree() > max_deg) continue;
    // Skip pairs already found from the f side (f in the ansatz).
    bool in_ansatz = true;
    for (const auto& c : f.coeffs())
      if (std::find(ansatz.begin(), ansatz.end(), c) == ansatz.end()) in_ansatz = false;
    if (in_ansatz) continue;
    classify(f, h);
  }
  return rep;
}

}  // namespace blocksuper
