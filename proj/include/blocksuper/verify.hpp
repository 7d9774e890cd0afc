#pragma once

// Exact verification suites. Each returns a CheckReport: how many cases were
// examined, how many failed, and renderings of the first few defects.

#include <blocksuper/algebra.hpp>
#include <blocksuper/closure.hpp>
#include <blocksuper/expr.hpp>
#include <blocksuper/hv.hpp>
#include <blocksuper/linalg.hpp>
#include <blocksuper/modules.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace blocksuper {

struct CheckReport {
  explicit CheckReport(std::string name = {}) : id(std::move(name)) {}

  std::string id;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> defects;  // first kMaxDefects renderings

  static constexpr std::size_t kMaxDefects = 16;

  bool passed() const { return failures == 0; }

  void check(bool ok, const auto& render) {
    ++cases;
    if (ok) return;
    if (++failures <= kMaxDefects) defects.push_back(render());
  }

  void absorb(const CheckReport& other) {
    cases += other.cases;
    failures += other.failures;
    for (const auto& d : other.defects)
      if (defects.size() < kMaxDefects) defects.push_back(d);
  }
};

/// Basis keys with |twice_index| <= max_twice and grade <= max_grade.
inline std::vector<BasisKey> keys_in_window(Sector sector, long max_twice, long max_grade) {
  std::vector<BasisKey> keys;
  for (int par = 0; par < 2; ++par)
    for (long t = -max_twice; t <= max_twice; ++t)
      for (long i = 0; i <= max_grade; ++i) {
        BasisKey k{par == 0 ? Parity::Even : Parity::Odd, t, i};
        if (k.valid_in(sector)) keys.push_back(k);
      }
  std::sort(keys.begin(), keys.end());
  return keys;
}

/// Monomials u^k in both slots, k <= max_degree.
template <class Vec>
std::vector<Vec> monomial_vectors(int max_degree) {
  std::vector<Vec> out;
  for (int k = 0; k <= max_degree; ++k) {
    out.push_back(Vec::even_part(Poly::monomial(k)));
    out.push_back(Vec::odd_part(Poly::monomial(k)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Algebra

inline CheckReport jacobi_suite(const StructureParams& p, long max_twice, long max_grade,
                                BracketRule rule = block_bracket_rule) {
  CheckReport rep{"jacobi"};
  const auto keys = keys_in_window(p.sector(), max_twice, max_grade);
  for (const auto& x : keys)
    for (const auto& y : keys)
      for (const auto& z : keys) {
        auto d = super_jacobi_defect(p, x, y, z, rule);
        rep.check(d.is_zero(), [&] {
          return "J(" + describe(x) + ", " + describe(y) + ", " + describe(z) + ") = " + format_element(d);
        });
      }
  return rep;
}

inline CheckReport skew_symmetry_suite(const StructureParams& p, long max_twice, long max_grade,
                                       BracketRule rule = block_bracket_rule) {
  CheckReport rep{"skew-symmetry"};
  const auto keys = keys_in_window(p.sector(), max_twice, max_grade);
  for (const auto& x : keys)
    for (const auto& y : keys) {
      auto lhs = bracket_basis(p, x, y, rule);
      auto rhs = bracket_basis(p, y, x, rule) * Scalar(-super_sign(x.parity, y.parity));
      rep.check(lhs == rhs, [&] { return "[" + describe(x) + ", " + describe(y) + "] = " + format_element(lhs); });
    }
  return rep;
}

/// Structure constants of the rescaled generators (1/q) key, as
/// (x, y) -> (output key, coefficient in the rescaled basis).
using SvirTable = std::map<std::pair<BasisKey, BasisKey>, std::pair<BasisKey, Scalar>>;

inline SvirTable svir_table(const StructureParams& p, long window) {
  SvirTable table;
  const auto keys = keys_in_window(p.sector(), 2 * window, 0);
  for (const auto& x : keys)
    for (const auto& y : keys) {
      const auto br = bracket(p, svir_rescale(p, x), svir_rescale(p, y));
      for (const auto& [k, c] : br.terms()) table[{x, y}] = {k, c * p.q()};
    }
  return table;
}

/// Super-Virasoro relations for the rescaled generators, plus equality of the
/// rescaled structure constants at q and at compare_q.
inline CheckReport check_svir_relations(const Scalar& q, Sector sector, long window, const Scalar& compare_q) {
  CheckReport rep{"svir-relations"};
  const StructureParams p(q, sector);
  const auto keys = keys_in_window(sector, 2 * window, 0);
  const Scalar half = Scalar::fraction(1, 2);
  for (const auto& x : keys)
    for (const auto& y : keys) {
      const BasisKey out{parity_sum(x.parity, y.parity), x.twice_index + y.twice_index, 0};
      Scalar c;
      const Scalar m = x.index(), n = y.index();
      if (x.is_even() && y.is_even())
        c = n - m;  // [L_m, L_n] = (n - m) L_{m+n}
      else if (x.is_even())
        c = n - m * half;  // [L_m, G_l] = (l - m/2) G_{m+l}
      else if (y.is_even())
        c = -(m - n * half);
      else
        c = Scalar(2);  // [G_l, G_r] = 2 L_{l+r}
      const AlgebraElement expected = svir_rescale(p, out) * c;
      const AlgebraElement got = bracket(p, svir_rescale(p, x), svir_rescale(p, y));
      rep.check(got == expected, [&] {
        return "[" + describe(x) + ", " + describe(y) + "] rescaled = " + format_element(got) + ", expected " +
               format_element(expected);
      });
    }
  const auto a = svir_table(p, window);
  const auto b = svir_table(StructureParams(compare_q, sector), window);
  rep.check(a == b, [&] { return "rescaled structure constants differ between q and compare_q"; });
  return rep;
}

/// Heisenberg-Virasoro generator image in S(-1): l_a -> -L_{a,0}, I_b -> L_{b,1}, C_j -> 0.
inline AlgebraElement hv_image(const HvKey& k) {
  AlgebraElement out(Sector::RB);
  if (k.kind == HvKind::L) out.add_term(BasisKey::L(k.index, 0), Scalar(-1));
  if (k.kind == HvKind::I) out.add_term(BasisKey::L(k.index, 1), Scalar(1));
  return out;
}

inline AlgebraElement hv_image(const HvElement& x) {
  AlgebraElement out(Sector::RB);
  for (const auto& [k, c] : x.terms()) out += c * hv_image(k);
  return out;
}

inline CheckReport check_hv_embedding(long window) {
  CheckReport rep{"hv-embedding"};
  const StructureParams p(Scalar(-1), Sector::RB);
  std::vector<HvKey> gens;
  for (long a = -window; a <= window; ++a) {
    gens.push_back(HvKey::L(a));
    gens.push_back(HvKey::I(a));
  }
  for (int j = 1; j <= 3; ++j) {
    const HvKey c = HvKey::C(j);
    rep.check(hv_image(c).is_zero(), [&] { return describe(c) + " has a nonzero image"; });
    gens.push_back(c);
  }
  for (const auto& x : gens)
    for (const auto& y : gens) {
      const auto lhs = hv_image(hv_bracket(x, y));
      const auto rhs = bracket(p, hv_image(x), hv_image(y));
      rep.check(lhs == rhs, [&] {
        return "[" + describe(x) + ", " + describe(y) + "]: image " + format_element(lhs) + " vs " +
               format_element(rhs);
      });
    }
  return rep;
}

/// tau([x,y]) = [tau x, tau y] over the NSB window, and tau injective on keys.
inline CheckReport check_tau_homomorphism(const Scalar& q, long max_twice, long max_grade) {
  CheckReport rep{"tau-homomorphism"};
  const StructureParams nsb(q, Sector::NSB), rb(q, Sector::RB);
  const auto keys = keys_in_window(Sector::NSB, max_twice, max_grade);
  std::map<BasisKey, BasisKey> seen;
  for (const auto& x : keys) {
    const auto img = tau_embed(x);
    const BasisKey image = img.terms().begin()->first;
    rep.check(img.size() == 1 && seen.emplace(image, x).second,
              [&] { return "tau is not injective at " + describe(x); });
  }
  for (const auto& x : keys)
    for (const auto& y : keys) {
      const auto lhs = tau_embed(bracket_basis(nsb, x, y));
      const auto rhs = bracket(rb, tau_embed(x), tau_embed(y));
      rep.check(lhs == rhs, [&] {
        return "tau[" + describe(x) + ", " + describe(y) + "] = " + format_element(lhs) + " vs " + format_element(rhs);
      });
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Modules

template <class Module>
CheckReport module_axiom_suite(const Module& mod, const std::vector<typename Module::key_type>& keys,
                               const std::vector<typename Module::vector_type>& vectors) {
  CheckReport rep{"module-axioms"};
  for (const auto& x : keys)
    for (const auto& y : keys)
      for (const auto& v : vectors) {
        const auto d = module_axiom_defect(mod, x, y, v);
        rep.check(d.is_zero(), [&] {
          return "(" + describe(x) + ", " + describe(y) + ") on " + format_vector(v) + " -> " + format_vector(d);
        });
      }
  return rep;
}

inline std::vector<HvKey> witt_keys(long max_index) {
  std::vector<HvKey> keys;
  for (long a = -max_index; a <= max_index; ++a) keys.push_back(HvKey::L(a));
  return keys;
}

inline std::vector<HvKey> hv_keys(long max_index) {
  std::vector<HvKey> keys;
  for (long a = -max_index; a <= max_index; ++a) {
    keys.push_back(HvKey::L(a));
    keys.push_back(HvKey::I(a));
  }
  for (int j = 1; j <= 3; ++j) keys.push_back(HvKey::C(j));
  return keys;
}

inline std::vector<PolyVector> poly_monomials(int max_degree) {
  std::vector<PolyVector> out;
  for (int k = 0; k <= max_degree; ++k) out.push_back({Poly::monomial(k)});
  return out;
}

/// phi(x v) = tau(x) phi(v) for NSB keys in the window and monomials up to degree_cap.
inline CheckReport check_phi_intertwines(const ModuleParams& params_l, const Scalar& sigma, long window,
                                         int degree_cap, long max_grade = 2) {
  CheckReport rep{"phi-intertwines"};
  const OmegaL left(params_l);
  const PhiImage base = phi_map(params_l, sigma, SuperVectorL{});
  const OmegaR right(base.params);
  for (const auto& x : keys_in_window(Sector::NSB, 2 * window, max_grade))
    for (const auto& v : monomial_vectors<SuperVectorL>(degree_cap)) {
      const auto lhs = phi_map(params_l, sigma, left.act(x, v)).vector;
      const auto rhs = right.act(tau_embed(x), phi_map(params_l, sigma, v).vector);
      rep.check(lhs == rhs, [&] {
        return "phi(" + describe(x) + " " + format_vector(v) + ") = " + format_vector(lhs) + " vs " +
               format_vector(rhs);
      });
    }
  return rep;
}

/// phi maps the degree-d part of the truncation onto the degree-d part:
/// for every d <= degree_cap, the images of the two degree-d monomials are
/// homogeneous of degree d and of rank 2.
inline CheckReport check_phi_graded_bijective(const ModuleParams& params_l, const Scalar& sigma, int degree_cap) {
  CheckReport rep{"phi-graded-bijective"};
  const std::size_t dim = 2 * (static_cast<std::size_t>(degree_cap) + 1);
  for (int d = 0; d <= degree_cap; ++d) {
    std::vector<CoordVector> images;
    bool homogeneous = true;
    for (const auto& v : {SuperVectorL::even_part(Poly::monomial(d)), SuperVectorL::odd_part(Poly::monomial(d))}) {
      const auto w = phi_map(params_l, sigma, v).vector;
      for (int k = 0; k < d; ++k)
        if (!w.even.coeff(k).is_zero() || !w.odd.coeff(k).is_zero()) homogeneous = false;
      if (w.degree() != d) homogeneous = false;
      images.push_back(to_coords(w, degree_cap));
    }
    const std::size_t r = rank_of(images, dim);
    rep.check(homogeneous && r == 2, [&] {
      return "degree " + std::to_string(d) + ": image rank " + std::to_string(r) + " of 2" +
             (homogeneous ? "" : ", not homogeneous");
    });
  }
  return rep;
}

struct Lemma32Defect {
  SuperVectorR even_op;  // X = L_{m,i}
  SuperVectorR odd_op;   // X = G_{m,i}
};

/// X (L_{0,0})^r v - (L_{0,0} - mq)^r X v for X in {L_{m,i}, G_{m,i}}.
inline Lemma32Defect check_lemma32_identity(const ModuleParams& params, long m, long i, long r,
                                            const SuperVectorR& v) {
  if (r < 0) throw usage_error("r must be non-negative");
  const OmegaR mod(params);
  const BasisKey l00 = BasisKey::L(0, 0);
  const Scalar mq = Scalar(m) * params.q();
  auto shifted_power = [&](SuperVectorR w) {
    for (long k = 0; k < r; ++k) w = mod.act(l00, w) - mq * w;
    return w;
  };
  SuperVectorR powered = v;
  for (long k = 0; k < r; ++k) powered = mod.act(l00, powered);
  Lemma32Defect out;
  for (const bool odd : {false, true}) {
    const BasisKey x = odd ? BasisKey::G(m, i) : BasisKey::L(m, i);
    (odd ? out.odd_op : out.even_op) = mod.act(x, powered) - shifted_power(mod.act(x, v));
  }
  return out;
}

inline CheckReport lemma32_suite(const ModuleParams& params, long max_m, long max_grade, long max_r, int max_degree) {
  CheckReport rep{"lemma32"};
  for (long m = -max_m; m <= max_m; ++m)
    for (long i = 0; i <= max_grade; ++i)
      for (long r = 0; r <= max_r; ++r)
        for (const auto& v : monomial_vectors<SuperVectorR>(max_degree)) {
          const auto d = check_lemma32_identity(params, m, i, r, v);
          rep.check(d.even_op.is_zero() && d.odd_op.is_zero(), [&] {
            return "m=" + std::to_string(m) + " i=" + std::to_string(i) + " r=" + std::to_string(r) + " on " +
                   format_vector(v) + ": L " + format_vector(d.even_op) + ", G " + format_vector(d.odd_op);
          });
        }
  return rep;
}

/// Base-point identities of Omega_L on 1_even and 1_odd, written out from the
/// closed forms rather than through act_L's slot code.
inline CheckReport check_lemma52_basepoints(const ModuleParams& params, long max_twice, long max_grade = 2) {
  CheckReport rep{"lemma52"};
  const OmegaL mod(params);
  const SuperVectorL one_even = SuperVectorL::even_part(Poly(1));
  const SuperVectorL one_odd = SuperVectorL::odd_part(Poly(1));
  const Scalar& q = params.q();
  const Scalar& lam = params.lambda();
  const bool minus_one = q == Scalar(-1);
  for (long t = -max_twice; t <= max_twice; ++t) {
    if (t % 2 == 0) continue;
    const Scalar m = Scalar::fraction(t, 2);
    const long m_down = (t - 1) / 2;  // m - 1/2
    const long m_up = (t + 1) / 2;    // m + 1/2
    for (long i = 0; i <= max_grade; ++i) {
      const BasisKey g = BasisKey::G_twice(t, i);
      const Scalar d0 = i == 0 ? Scalar(1) : Scalar();
      const Scalar d1 = (i == 1 && minus_one) ? Scalar(1) : Scalar();
      // G_{m,i} 1_even = lambda^{m-1/2} delta_{i,0} 1_odd
      const SuperVectorL want_even = SuperVectorL::odd_part(Poly(pow(lam, m_down) * d0));
      const auto got_even = mod.act(g, one_even);
      rep.check(got_even == want_even, [&] {
        return describe(g) + " 1_even = " + format_vector(got_even) + ", expected " + format_vector(want_even);
      });
      // G_{m,i} 1_odd = q lambda^{m+1/2} (delta_{i,0}(t - 2mqa) + 2 delta_{q,-1} delta_{i,1} b) 1_even
      const Scalar s = q * pow(lam, m_up);
      const SuperVectorL want_odd = SuperVectorL::even_part(
          Poly::linear(s * d0, s * (Scalar(2) * d1 * params.b() - d0 * Scalar(2) * m * q * params.a())));
      const auto got_odd = mod.act(g, one_odd);
      rep.check(got_odd == want_odd, [&] {
        return describe(g) + " 1_odd = " + format_vector(got_odd) + ", expected " + format_vector(want_odd);
      });
    }
  }
  // G_{3/2,0} 1_even = lambda 1_odd
  const auto spot = mod.act(BasisKey::G_twice(3, 0), one_even);
  rep.check(spot == SuperVectorL::odd_part(Poly(lam)),
            [&] { return "G(3/2,0) 1_even = " + format_vector(spot) + ", expected lambda 1_odd"; });
  return rep;
}

/// With psi f(u) = f(q s): psi((1/q) L_{m,0} f) = Witt L_m psi(f) for every q,
/// and at q = -1 also psi(L_{m,1} f) = I_m psi(f).
inline CheckReport check_restriction(const ModuleParams& params, long max_mode, int max_degree) {
  CheckReport rep{"restriction"};
  const OmegaR mod(params);
  const Scalar& q = params.q();
  auto psi = [&](const Poly& f) { return compose_affine(f, q, Scalar()); };
  for (long m = -max_mode; m <= max_mode; ++m)
    for (int k = 0; k <= max_degree; ++k) {
      const Poly f = Poly::monomial(k);
      const SuperVectorR v = SuperVectorR::even_part(f);
      const auto lhs = psi(mod.act(BasisKey::L(m, 0), v).even * q.inverse());
      const auto rhs = act_W(params.lambda(), params.a(), m, PolyVector{psi(f)}).value;
      rep.check(lhs == rhs, [&] {
        return "L(" + std::to_string(m) + ",0) on u^" + std::to_string(k) + ": " + format_poly(lhs, "s") + " vs " +
               format_poly(rhs, "s");
      });
      if (!params.b_active()) continue;
      const auto lhs_i = psi(mod.act(BasisKey::L(m, 1), v).even);
      const auto rhs_i =
          act_H(params.lambda(), params.a(), params.b(), HvKey::I(m), PolyVector{psi(f)}).value;
      rep.check(lhs_i == rhs_i, [&] {
        return "L(" + std::to_string(m) + ",1) on u^" + std::to_string(k) + ": " + format_poly(lhs_i, "s") +
               " vs " + format_poly(rhs_i, "s");
      });
    }
  return rep;
}

/// At a = b = 0, u C[u] (even) plus the whole odd slot is closed under every
/// key of the window: checked on its monomial basis.
template <class Module>
CheckReport check_closed_subspace(const Module& mod, long max_twice, long max_grade, int max_degree) {
  using Vec = typename Module::vector_type;
  CheckReport rep{"closed-subspace"};
  std::vector<Vec> basis;
  for (int k = 0; k <= max_degree; ++k) {
    if (k > 0) basis.push_back(Vec::even_part(Poly::monomial(k)));
    basis.push_back(Vec::odd_part(Poly::monomial(k)));
  }
  for (const auto& x : keys_in_window(mod.sector(), max_twice, max_grade))
    for (const auto& v : basis) {
      const auto w = mod.act(x, v);
      rep.check(w.even.coeff(0).is_zero(), [&] {
        return describe(x) + " " + format_vector(v) + " = " + format_vector(w) + " leaves the subspace";
      });
    }
  return rep;
}

/// Every row of a closure lies in u C[u] plus the odd slot.
template <class Module>
bool span_inside_closed_subspace(const ClosureResult<Module>& res) {
  for (const auto& row : res.basis.rows())
    if (!row.coords[0].is_zero()) return false;
  return true;
}

/// Certificates replay to their rows.
template <class Module>
CheckReport check_certificates(const Module& mod, const ClosureResult<Module>& res) {
  CheckReport rep{"certificates"};
  for (std::size_t k = 0; k < res.basis.rank(); ++k) {
    const auto replayed = replay_row(mod, res, k);
    const auto row = res.row_vector(k);
    rep.check(replayed == row, [&] {
      return "row " + std::to_string(k) + " replays to " + format_vector(replayed) + ", stored " + format_vector(row);
    });
  }
  return rep;
}

/// The phi-image of an Omega_L closure lies in the Omega_R closure of the
/// phi-images of the seeds, with the mode bound doubled to cover tau.
inline CheckReport check_phi_closure_consistency(const ModuleParams& params_l, const Scalar& sigma,
                                                 const std::vector<SuperVectorL>& seeds, const DegreeWindow& window) {
  CheckReport rep{"phi-closure"};
  const OmegaL left(params_l);
  const auto lres = closure(left, seeds, window);
  std::vector<SuperVectorR> rseeds;
  for (const auto& s : seeds) rseeds.push_back(phi_map(params_l, sigma, s).vector);
  DegreeWindow rwindow = window;
  rwindow.max_mode = 2 * window.max_mode;
  const OmegaR right(phi_map(params_l, sigma, SuperVectorL{}).params);
  const auto rres = closure(right, rseeds, rwindow);
  for (std::size_t k = 0; k < lres.basis.rank(); ++k) {
    const auto img = phi_map(params_l, sigma, lres.row_vector(k)).vector;
    rep.check(rres.basis.contains(to_coords(img, window.max_degree)),
              [&] { return "phi of row " + std::to_string(k) + " = " + format_vector(img) + " is outside"; });
  }
  return rep;
}

}  // namespace blocksuper
