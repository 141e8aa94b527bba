#include "hforge/bifrac.hpp"

#include <gtest/gtest.h>

#include "hforge/errors.hpp"

namespace hforge {
namespace {

const BiFrac x = BiFrac::x();
const BiFrac s = BiFrac::s();
const BiFrac one(Rational(1));

TEST(BiPoly, SparseLexOrder) {
  const BiPoly p = BiPoly::from_terms({{0, 0, Rational(1)}, {1, 1, Rational(1)}, {0, 2, Rational(-1)},
                                       {1, 0, Rational(3, 2)}, {2, 0, Rational(0)}});
  EXPECT_EQ(p.to_string(), "x*s + 3/2*x - s^2 + 1");
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p.degree_x(), 1);
  EXPECT_EQ(p.degree_s(), 2);
  EXPECT_EQ(BiPoly().degree_x(), -1);
}

TEST(BiPoly, MergesDuplicatesAndDropsZeros) {
  const BiPoly p = BiPoly::from_terms({{1, 0, Rational(2)}, {1, 0, Rational(-2)}, {0, 1, Rational(1)}});
  EXPECT_EQ(p, BiPoly::s());
}

TEST(BiPoly, ExactDivision) {
  const BiPoly xp1 = BiPoly::x() + BiPoly(Rational(1));
  const BiPoly sp1 = BiPoly::s() + BiPoly(Rational(1));
  const auto q = (xp1 * sp1).divide_exact(sp1);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, xp1);
  EXPECT_FALSE(xp1.divide_exact(sp1).has_value());
  EXPECT_THROW((void)xp1.divide_exact(BiPoly()), DivisionByZero);
}

TEST(BiPoly, SubstituteAndEval) {
  const BiPoly p = BiPoly::x() * BiPoly::s() + BiPoly::x() * BiPoly::x();
  EXPECT_EQ(p.eval(Rational(2), Rational(3)), Rational(15));
  EXPECT_EQ(p.substitute_x(Rational(-1)), BiPoly(Rational(1)) - BiPoly::s());
  EXPECT_EQ(p.substitute_s(Rational(0)), BiPoly::x() * BiPoly::x());
  EXPECT_EQ(p.derivative_s(), BiPoly::x());
}

TEST(BiFrac, EqualityByCrossMultiplication) {
  EXPECT_TRUE(bifrac_eq(x / (x + one), (x * (s + one)) / ((x + one) * (s + one))));
  EXPECT_FALSE(bifrac_eq(x, x + one));
  EXPECT_TRUE(bifrac_eq((x * x - one) / (x - one), x + one));
  EXPECT_TRUE(cross_difference(x, x).is_zero());
  EXPECT_EQ(cross_difference(x + one, x), BiPoly(Rational(1)));
}

TEST(BiFrac, MakeKeepsValueWithoutReducing) {
  const BiPoly n = BiPoly::x() * (BiPoly::s() + BiPoly(Rational(2)));
  const BiPoly d = (BiPoly::x() + BiPoly(Rational(1))) * (BiPoly::s() + BiPoly(Rational(3)));
  const BiFrac f = BiFrac::make(n, d);
  EXPECT_EQ(f.eval(Rational(1), Rational(1)), Rational(3, 8));
  EXPECT_THROW(BiFrac::make(n, BiPoly()), DivisionByZero);
}

TEST(BiFrac, EmbeddingsPreserveValues) {
  EXPECT_TRUE(bifrac_eq(BiFrac(Rational(3, 4)), BiFrac(RatFunc(Rational(3, 4)))));
  const RatFunc f = RatFunc(Rational(1)) / (RatFunc::s() + RatFunc(Rational(1)));
  const BiFrac b(f);
  EXPECT_TRUE(b.is_free_of_x());
  ASSERT_TRUE(b.as_ratfunc().has_value());
  EXPECT_EQ(*b.as_ratfunc(), f);
  EXPECT_EQ(BiFrac(Rational(5)).as_rational(), Rational(5));
  EXPECT_FALSE(x.as_rational().has_value());
}

TEST(BiFrac, DerivativeQuotientRule) {
  const BiFrac f = x / (s + one);
  EXPECT_TRUE(bifrac_eq(f.derivative_s(), -x / ((s + one) * (s + one))));
  EXPECT_TRUE(bifrac_eq((s * s * x).derivative_s(), BiFrac(Rational(2)) * s * x));
}

TEST(BiFrac, SubstituteCancelsRemovableSingularity) {
  // (x+1)^2 * x/(x+1) at x = -1 is 0, not a pole.
  const BiFrac f = (x + one) * (x + one) * (x / (x + one));
  EXPECT_TRUE(bifrac_eq(f.substitute_x(Rational(-1)), BiFrac(Rational(0))));
  const BiFrac g = (x * x - one) / (x + one);
  EXPECT_TRUE(bifrac_eq(g.substitute_x(Rational(-1)), BiFrac(Rational(-2))));
  EXPECT_THROW((void)(one / (x + one)).substitute_x(Rational(-1)), PoleError);
  EXPECT_THROW((void)(one / s).eval(Rational(0), Rational(1)), PoleError);
}

TEST(BiFrac, PowAndAsPolynomial) {
  const BiFrac r = x / (x + one);
  const BiFrac p = (x + one).pow(3) * r.pow(2);
  const auto poly = p.as_polynomial();
  ASSERT_TRUE(poly.has_value());
  EXPECT_EQ(*poly, (BiPoly::x() * BiPoly::x()) * (BiPoly::x() + BiPoly(Rational(1))));
  EXPECT_TRUE(bifrac_eq(r.pow(-1), (x + one) / x));
  EXPECT_THROW(BiFrac().pow(-1), DivisionByZero);
  EXPECT_FALSE(r.as_polynomial().has_value());
}

}  // namespace
}  // namespace hforge
