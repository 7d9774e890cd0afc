#include "generators.hpp"

#include <gtest/gtest.h>

#include <limits>

using namespace blocksuper;

namespace {

Scalar sc(long r, long s = 0) { return Scalar(Rational(r), Rational(s)); }

Poly poly_of(std::initializer_list<Scalar> c) { return Poly(std::vector<Scalar>(c)); }

}  // namespace

// --- Rational -------------------------------------------------------------

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational(0, 7), Rational(0));
  EXPECT_EQ(Rational(0, -7).get_str(), "0");
  EXPECT_EQ(Rational(10, 5).get_str(), "2");
  EXPECT_THROW(Rational(1, 0), arithmetic_error);
}

TEST(Rational, OverflowFallsBackToExactBigValues) {
  const long big = std::numeric_limits<long>::max();
  const Rational a(big);
  const Rational sq = a * a;
  EXPECT_FALSE(sq.is_small());
  EXPECT_EQ(sq.to_mpq(), mpq_class(mpz_class(big) * big));
  EXPECT_EQ(sq / a, a);
  EXPECT_TRUE((sq / a).is_small());
  EXPECT_EQ((a + Rational(1)).to_mpq(), mpq_class(mpz_class(big) + 1));
  EXPECT_EQ(-Rational(std::numeric_limits<long>::min() + 1) - Rational(2),
            Rational(mpq_class(mpz_class(big) - 2)));
}

TEST(Rational, AgreesWithGmpOnRandomChains) {
  gen::Source g(11);
  for (int trial = 0; trial < 200; ++trial) {
    Rational r(1);
    mpq_class m(1);
    for (int step = 0; step < 40; ++step) {
      const long num = g.integer(-1000000007L, 1000000007L);
      const long den = g.integer(1, 999999937L);
      const Rational x(num, den);
      mpq_class y(num, den);
      y.canonicalize();
      switch (g.integer(0, 3)) {
        case 0: r += x; m += y; break;
        case 1: r -= x; m -= y; break;
        case 2: r *= x; m *= y; break;
        default:
          if (num != 0) {
            r /= x;
            m /= y;
          }
      }
      ASSERT_EQ(r.to_mpq(), m);
      ASSERT_EQ(r, Rational(m));
      ASSERT_EQ(sgn(r), sgn(m));
    }
  }
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  const Rational huge = Rational(std::numeric_limits<long>::max()) * Rational(4);
  EXPECT_LT(Rational(5), huge);
  EXPECT_GT(Rational(5), -huge);
}

// --- Scalar ---------------------------------------------------------------

TEST(Scalar, SpecArithmetic) {
  EXPECT_EQ(sc(1) + sc(0, 1), sc(1, 1));
  EXPECT_EQ(sc(0, 1) * sc(0, 1), sc(2));
  // 1 / (1 + sqrt2) = -1 + sqrt2 (oracle)
  EXPECT_EQ(sc(1) / sc(1, 1), sc(-1, 1));
  EXPECT_THROW(sc(1) / Scalar(), arithmetic_error);
}

TEST(Scalar, Powers) {
  EXPECT_EQ(pow(Scalar(3), 2), Scalar(9));
  EXPECT_EQ(pow(Scalar(2), -1), Scalar::fraction(1, 2));
  EXPECT_EQ(pow(sc(1, 1), 2), sc(3, 2));
  EXPECT_EQ(pow(Scalar(5), 0), Scalar(1));
  EXPECT_THROW(pow(Scalar(), -1), arithmetic_error);
}

TEST(ScalarProperty, FieldLaws) {
  gen::Source g(1);
  for (int k = 0; k < 500; ++k) {
    const Scalar a = g.scalar(), b = g.scalar(), c = g.scalar();
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a - a, Scalar());
    if (!a.is_zero()) {
      ASSERT_EQ(a * a.inverse(), Scalar(1));
      ASSERT_EQ((b / a) * a, b);
    }
  }
}

TEST(ScalarProperty, ConjugateIsAFieldAutomorphism) {
  gen::Source g(2);
  for (int k = 0; k < 300; ++k) {
    const Scalar a = g.scalar(), b = g.scalar();
    ASSERT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
    ASSERT_EQ(Scalar(a.norm()), a * a.conjugate());
  }
}

// --- Poly -----------------------------------------------------------------

TEST(Poly, CanonicalTrim) {
  EXPECT_TRUE(poly_of({Scalar(), Scalar()}).is_zero());
  EXPECT_EQ(Poly().degree(), Poly::kZeroDegree);
  EXPECT_EQ(poly_of({Scalar(1), Scalar(2), Scalar()}).degree(), 1);
}

TEST(Poly, SpecArithmetic) {
  const Poly u = Poly::variable();
  EXPECT_EQ(u + Poly(1), poly_of({Scalar(1), Scalar(1)}));
  EXPECT_EQ((u - Poly(1)) * (u + Poly(1)), poly_of({Scalar(-1), Scalar(), Scalar(1)}));
  EXPECT_EQ((u * u + u) * Scalar::fraction(1, 2),
            poly_of({Scalar(), Scalar::fraction(1, 2), Scalar::fraction(1, 2)}));
}

TEST(Poly, ComposeAffine) {
  const Poly u = Poly::variable();
  // (u - 2)^2 expanded (oracle)
  EXPECT_EQ(compose_affine(u * u, Scalar(1), Scalar(-2)), poly_of({Scalar(4), Scalar(-4), Scalar(1)}));
  const Poly p = poly_of({Scalar(3), Scalar(-1), sc(0, 2)});
  EXPECT_EQ(compose_affine(p, Scalar(1), Scalar()), p);
  EXPECT_EQ(compose_affine(u, Scalar::fraction(1, 2), Scalar()), Poly::monomial(1, Scalar::fraction(1, 2)));
}

TEST(Poly, DivMod) {
  const Poly u = Poly::variable();
  const Poly num = u * u - Poly(1);
  auto [quo, rem] = divmod(num, u - Poly(1));
  EXPECT_EQ(quo, u + Poly(1));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_THROW(divmod(num, Poly()), arithmetic_error);
}

TEST(PolyProperty, ShiftInversion) {
  gen::Source g(3);
  for (int k = 0; k < 300; ++k) {
    const Poly p = g.poly(7);
    const Scalar beta = g.scalar();
    ASSERT_EQ(shift(shift(p, beta), -beta), p);
  }
}

TEST(PolyProperty, ComposeAffineIsARingHomomorphism) {
  gen::Source g(4);
  for (int k = 0; k < 300; ++k) {
    const Poly p = g.poly(5), q = g.poly(5);
    const Scalar alpha = g.scalar(), beta = g.scalar();
    ASSERT_EQ(compose_affine(p + q, alpha, beta), compose_affine(p, alpha, beta) + compose_affine(q, alpha, beta));
    ASSERT_EQ(compose_affine(p * q, alpha, beta), compose_affine(p, alpha, beta) * compose_affine(q, alpha, beta));
  }
}

TEST(PolyProperty, ComposeAffineMatchesEvaluation) {
  gen::Source g(5);
  for (int k = 0; k < 200; ++k) {
    const Poly p = g.poly(6);
    const Scalar alpha = g.scalar(), beta = g.scalar(), at = g.scalar();
    ASSERT_EQ(compose_affine(p, alpha, beta).evaluate(at), p.evaluate(alpha * at + beta));
  }
}

TEST(PolyProperty, DegreeOfProduct) {
  gen::Source g(6);
  for (int k = 0; k < 300; ++k) {
    const Poly p = g.poly(6), q = g.poly(6);
    if (p.is_zero() || q.is_zero()) continue;
    ASSERT_EQ((p * q).degree(), p.degree() + q.degree());
  }
}

TEST(PolyProperty, DivisionIdentity) {
  gen::Source g(7);
  for (int k = 0; k < 200; ++k) {
    const Poly p = g.poly(7), d = g.poly(3);
    if (d.is_zero()) continue;
    auto [quo, rem] = divmod(p, d);
    ASSERT_EQ(quo * d + rem, p);
    ASSERT_LT(rem.degree(), d.degree());
  }
}
