#include "generators.hpp"

#include <gtest/gtest.h>

using namespace blocksuper;

namespace {

const Poly u = Poly::variable();

ModuleParams R(Scalar lambda, Scalar a, Scalar b, Scalar q) {
  return ModuleParams(Sector::RB, std::move(lambda), std::move(a), std::move(b), std::move(q));
}
ModuleParams L(Scalar lambda, Scalar a, Scalar b, Scalar q) {
  return ModuleParams(Sector::NSB, std::move(lambda), std::move(a), std::move(b), std::move(q));
}

Scalar half(long n) { return Scalar::fraction(n, 2); }
const Scalar kSqrt2(Rational(0), Rational(1));

}  // namespace

TEST(ModuleParams, RejectsDegenerateValues) {
  EXPECT_THROW(R(Scalar(), Scalar(), Scalar(), Scalar(1)), usage_error);
  EXPECT_THROW(R(Scalar(1), Scalar(), Scalar(), Scalar()), usage_error);
  EXPECT_THROW(OmegaR(L(Scalar(1), Scalar(), Scalar(), Scalar(1))), usage_error);
  EXPECT_THROW(act_L(R(Scalar(1), Scalar(), Scalar(), Scalar(1)), BasisKey::L(0, 0), {}), usage_error);
  EXPECT_THROW(act_R(R(Scalar(1), Scalar(), Scalar(), Scalar(1)), BasisKey::G_twice(1, 0), {}), usage_error);
}

TEST(OmegaRAction, Examples) {
  const auto p = R(Scalar(3), Scalar(1), Scalar(), Scalar(2));
  EXPECT_EQ(act_R(p, BasisKey::L(1, 0), SuperVectorR::even_part(Poly(1))),
            SuperVectorR::even_part(Scalar(3) * u - Poly(6)));
  EXPECT_EQ(act_R(p, BasisKey::G(0, 0), SuperVectorR::even_part(Poly(1))), SuperVectorR::odd_part(Poly(1)));

  const auto pb = R(Scalar(1), Scalar(), Scalar(5), Scalar(-1));
  EXPECT_EQ(act_R(pb, BasisKey::L(2, 1), SuperVectorR::even_part(u)),
            SuperVectorR::even_part(Scalar(5) * u + Poly(10)));
  EXPECT_EQ(act_R(pb, BasisKey::G(1, 0), SuperVectorR::odd_part(Poly(1))), SuperVectorR::even_part(-u));

  const auto pc = R(Scalar(2), Scalar::fraction(1, 3), Scalar(5), Scalar(-1));
  EXPECT_EQ(act_R(pc, BasisKey::G(-1, 1), SuperVectorR::odd_part(u)),
            SuperVectorR::even_part(Poly(5) - Scalar(5) * u));

  const auto pd = R(Scalar(3), half(-3), Scalar(), half(1));
  EXPECT_EQ(act_R(pd, BasisKey::L(-2, 0), SuperVectorR::odd_part(u * u + Poly(1))),
            SuperVectorR::odd_part((u * u * u + u * u - Poly(2)) * Scalar::fraction(1, 9)));
}

TEST(OmegaRAction, HigherGradesVanishAwayFromMinusOne) {
  const auto p = R(Scalar(3), Scalar(1), Scalar(5), Scalar(2));
  const SuperVectorR v{u + Poly(1), u * u};
  for (long i = 1; i <= 3; ++i) {
    EXPECT_TRUE(act_R(p, BasisKey::L(2, i), v).is_zero());
    EXPECT_TRUE(act_R(p, BasisKey::G(-1, i), v).is_zero());
  }
  const auto pm = R(Scalar(3), Scalar(1), Scalar(5), Scalar(-1));
  EXPECT_FALSE(act_R(pm, BasisKey::L(2, 1), v).is_zero());
  EXPECT_TRUE(act_R(pm, BasisKey::L(2, 2), v).is_zero());
}

TEST(OmegaLAction, Examples) {
  const auto p = L(Scalar(2), Scalar(), Scalar(), Scalar(1));
  EXPECT_EQ(act_L(p, BasisKey::G_twice(1, 0), SuperVectorL::even_part(Poly(1))), SuperVectorL::odd_part(Poly(1)));
  EXPECT_EQ(act_L(p, BasisKey::G_twice(1, 0), SuperVectorL::odd_part(Poly(1))),
            SuperVectorL::even_part(Scalar(2) * u));
  EXPECT_EQ(act_L(p, BasisKey::L(1, 0), SuperVectorL::odd_part(u)),
            SuperVectorL::odd_part(Scalar(2) * u * u - Scalar(3) * u + Poly(1)));

  const auto pb = L(Scalar(3), Scalar(1), Scalar(5), Scalar(-1));
  EXPECT_EQ(act_L(pb, BasisKey::G_twice(-3, 1), SuperVectorL::odd_part(u * u)),
            SuperVectorL::even_part(Scalar::fraction(-10, 3) * u * u + Scalar(10) * u - Poly(half(15))));

  const auto pc = L(Scalar(4), half(-3), Scalar(), Scalar(2));
  EXPECT_EQ(act_L(pc, BasisKey::G_twice(5, 0), SuperVectorL::even_part(u + Poly(1))),
            SuperVectorL::odd_part(Scalar(16) * u - Poly(64)));
}

TEST(WittAndHv, Examples) {
  EXPECT_EQ(act_W(Scalar(2), Scalar(3), -1, PolyVector{u}).value, half(1) * u * u + Scalar(2) * u + Poly(half(3)));
  EXPECT_EQ(act_H(Scalar(3), Scalar(), Scalar(5), HvKey::I(2), PolyVector{Poly(1)}).value, Poly(45));
  for (int j = 1; j <= 3; ++j)
    EXPECT_TRUE(act_H(Scalar(3), Scalar(1), Scalar(5), HvKey::C(j), PolyVector{u}).is_zero());
  EXPECT_THROW(WittModule(Scalar(1), Scalar()).act(HvKey::I(1), PolyVector{u}), usage_error);
}

TEST(Phi, Examples) {
  const auto p = L(Scalar(4), Scalar(1), Scalar(3), Scalar(-1));
  const auto img = phi_map(p, Scalar(2), SuperVectorL::even_part(u));
  EXPECT_EQ(img.vector, SuperVectorR::even_part(half(1) * u));
  EXPECT_EQ(img.params, R(Scalar(2), Scalar(1), Scalar(6), Scalar(-1)));
  EXPECT_EQ(phi_map(p, Scalar(2), SuperVectorL::odd_part(Poly(1))).vector, SuperVectorR::odd_part(Poly(kSqrt2)));
  EXPECT_THROW(phi_map(p, Scalar(3), {}), usage_error);

  // phi(G(1/2,0) 1_even) = tau(G(1/2,0)) phi(1_even) = sqrt2 1_odd
  const auto lhs = phi_map(p, Scalar(2), act_L(p, BasisKey::G_twice(1, 0), SuperVectorL::even_part(Poly(1)))).vector;
  const auto rhs = OmegaR(img.params).act(tau_embed(BasisKey::G_twice(1, 0)), SuperVectorR::even_part(Poly(1)));
  EXPECT_EQ(lhs, SuperVectorR::odd_part(Poly(kSqrt2)));
  EXPECT_EQ(rhs, lhs);
}

TEST(Phi, IntertwinesAndIsGradedBijective) {
  for (const auto& [lam, sigma] : {std::pair{Scalar(4), Scalar(2)}, std::pair{Scalar::fraction(9, 4), half(3)},
                                   std::pair{Scalar(2), kSqrt2}})
    for (const Scalar& q : {Scalar(-1), Scalar(2), half(1)}) {
      const auto p = L(lam, Scalar::fraction(2, 3), Scalar(3), q);
      EXPECT_TRUE(check_phi_intertwines(p, sigma, 3, 4).passed());
      EXPECT_TRUE(check_phi_graded_bijective(p, sigma, 5).passed());
    }
}

TEST(Lemma32, Example) {
  const auto p = R(Scalar(3), Scalar(1), Scalar(), Scalar(2));
  const auto d = check_lemma32_identity(p, 1, 0, 2, SuperVectorR::even_part(Poly(1)));
  EXPECT_TRUE(d.even_op.is_zero());
  EXPECT_TRUE(d.odd_op.is_zero());
  const OmegaR mod(p);
  auto v = SuperVectorR::even_part(Poly(1));
  v = mod.act(BasisKey::L(0, 0), mod.act(BasisKey::L(0, 0), v));
  EXPECT_EQ(mod.act(BasisKey::L(1, 0), v).even,
            Scalar(3) * u * u * u - Scalar(18) * u * u + Scalar(36) * u - Poly(24));
}

TEST(Lemma32, Suite) {
  for (const Scalar& q : {Scalar(-1), Scalar(2)})
    EXPECT_TRUE(lemma32_suite(R(Scalar(3), half(-3), Scalar(5), q), 2, 2, 3, 3).passed());
}

TEST(Lemma52, BasePoints) {
  for (const Scalar& q : {Scalar(-1), Scalar(2), half(1)})
    for (const Scalar& b : {Scalar(), Scalar(5)})
      EXPECT_TRUE(check_lemma52_basepoints(L(Scalar(3), Scalar(1), b, q), 9, 3).passed());
}

TEST(Restriction, WittAndHvPullback) {
  for (const Scalar& q : {Scalar(-1), Scalar(2), half(1), Scalar::fraction(-3, 5)})
    EXPECT_TRUE(check_restriction(R(Scalar(3), Scalar(1), Scalar(5), q), 4, 5).passed());
}

TEST(ModuleAxioms, WittAndHvModules) {
  EXPECT_TRUE(module_axiom_suite(WittModule(Scalar(3), half(-3)), witt_keys(3), poly_monomials(4)).passed());
  EXPECT_TRUE(module_axiom_suite(HvModule(Scalar(3), half(-3), Scalar(5)), hv_keys(3), poly_monomials(4)).passed());
}

namespace {
std::optional<Term> drop_grade_shift(const StructureParams& p, const BasisKey& x, const BasisKey& y) {
  auto t = block_bracket_rule(p, x, y);
  if (t) t->key.grade = x.grade;
  return t;
}
}  // namespace

TEST(ModuleAxioms, DetectCorruptedBracket) {
  const OmegaR bad(R(Scalar(1), Scalar(), Scalar(5), Scalar(-1)), drop_grade_shift);
  const auto rep =
      module_axiom_suite(bad, keys_in_window(Sector::RB, 2, 1), monomial_vectors<SuperVectorR>(1));
  EXPECT_FALSE(rep.passed());
}

TEST(ModuleProperty, AxiomsOnRandomParametersKeysAndVectors) {
  gen::Source g(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Scalar lam = g.nonzero_scalar(4);
    const Scalar a = g.scalar(), b = g.scalar();
    const Scalar q = g.coin() ? Scalar(-1) : g.nonzero_scalar(4);
    const OmegaR r(R(lam, a, b, q));
    const OmegaL l(L(lam, a, b, q));
    for (int k = 0; k < 25; ++k) {
      ASSERT_TRUE(module_axiom_defect(r, g.key(Sector::RB, 6, 2), g.key(Sector::RB, 6, 2),
                                      g.vector<RamondSlots>(3))
                      .is_zero());
      ASSERT_TRUE(module_axiom_defect(l, g.key(Sector::NSB, 7, 2), g.key(Sector::NSB, 7, 2),
                                      g.vector<NeveuSchwarzSlots>(3))
                      .is_zero());
    }
  }
}

TEST(ModuleProperty, ParityOfTheAction) {
  gen::Source g(32);
  const OmegaR r(R(Scalar(2), Scalar(1), Scalar(5), Scalar(-1)));
  for (int k = 0; k < 300; ++k) {
    const auto key = g.key(Sector::RB, 8, 2);
    const auto ev = SuperVectorR::even_part(g.poly(4));
    const auto od = SuperVectorR::odd_part(g.poly(4));
    const auto a = r.act(key, ev), b = r.act(key, od);
    if (key.is_even()) {
      ASSERT_TRUE(a.odd.is_zero());
      ASSERT_TRUE(b.even.is_zero());
    } else {
      ASSERT_TRUE(a.even.is_zero());
      ASSERT_TRUE(b.odd.is_zero());
    }
  }
}

TEST(ModuleProperty, ActionIsLinear) {
  gen::Source g(33);
  const OmegaL l(L(Scalar(3), half(1), Scalar(2), Scalar(-1)));
  for (int k = 0; k < 300; ++k) {
    const auto key = g.key(Sector::NSB, 9, 2);
    const auto v = g.vector<NeveuSchwarzSlots>(), w = g.vector<NeveuSchwarzSlots>();
    const Scalar c = g.scalar();
    ASSERT_EQ(l.act(key, v + c * w), l.act(key, v) + c * l.act(key, w));
  }
}

TEST(ModuleProperty, BIsInertAwayFromMinusOne) {
  gen::Source g(34);
  for (int k = 0; k < 200; ++k) {
    const Scalar q = g.nonzero_scalar(4);
    if (q == Scalar(-1)) continue;
    const auto key = g.key(Sector::RB, 8, 3);
    const auto v = g.vector<RamondSlots>();
    ASSERT_EQ(act_R(R(Scalar(2), Scalar(1), g.scalar(), q), key, v), act_R(R(Scalar(2), Scalar(1), g.scalar(), q), key, v));
  }
}

TEST(ModuleProperty, PhiIntertwinesOnRandomVectors) {
  gen::Source g(35);
  const auto p = L(Scalar(4), Scalar::fraction(1, 3), Scalar(7), Scalar(-1));
  const OmegaL left(p);
  const OmegaR right(phi_map(p, Scalar(-2), {}).params);
  for (int k = 0; k < 200; ++k) {
    const auto x = g.element(Sector::NSB);
    const auto v = g.vector<NeveuSchwarzSlots>();
    ASSERT_EQ(phi_map(p, Scalar(-2), left.act(x, v)).vector,
              right.act(tau_embed(x), phi_map(p, Scalar(-2), v).vector));
  }
}
