#include "hforge/poly.hpp"

#include <gtest/gtest.h>

#include "hforge/errors.hpp"

namespace hforge {
namespace {

const Poly s = Poly::linear(Rational(0));

TEST(Poly, ZeroIsEmptyWithDegreeMinusOne) {
  const Poly zero;
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.degree(), -1);
  EXPECT_TRUE(zero.coefficients().empty());
  EXPECT_EQ(Poly({Rational(0), Rational(0)}), zero);
  EXPECT_EQ(Poly(Rational(0)), zero);
  EXPECT_EQ(zero.to_string(), "0");
}

TEST(Poly, TrimsLeadingZeros) {
  const Poly p({Rational(1), Rational(2), Rational(0)});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.leading(), Rational(2));
  EXPECT_EQ((s * s - s * s).degree(), -1);
}

TEST(Poly, DegreeOfProductIsSum) {
  const Poly p = s * s + Rational(3);
  const Poly q = s - Rational(1, 2);
  EXPECT_EQ((p * q).degree(), 3);
}

TEST(Poly, Printing) {
  EXPECT_EQ((s * s - Rational(1)).to_string(), "s^2 - 1");
  EXPECT_EQ((Rational(1, 2) * s + Rational(3)).to_string(), "1/2*s + 3");
  EXPECT_EQ((-s).to_string(), "-s");
  EXPECT_EQ(Poly::linear(Rational(2)).to_string(), "s + 2");
}

TEST(Poly, GcdExamples) {
  EXPECT_EQ(poly_gcd(s * s - Rational(1), s - Rational(1)), s - Rational(1));
  EXPECT_EQ(poly_gcd(s + Rational(2), s + Rational(3)), Poly(Rational(1)));
  EXPECT_EQ(poly_gcd(Poly(), Poly()), Poly());
  EXPECT_TRUE(poly_gcd(Poly(), Poly()).is_zero());
  EXPECT_EQ(poly_gcd(Rational(4) * s + Rational(2), Poly()), s + Rational(1, 2));
  EXPECT_EQ(poly_gcd(Poly(Rational(5)), Poly(Rational(7))), Poly(Rational(1)));
}

TEST(Poly, DivMod) {
  const auto [q, r] = Poly::divmod(s * s * s + Rational(1), s + Rational(1));
  EXPECT_EQ(q, s * s - s + Rational(1));
  EXPECT_TRUE(r.is_zero());
  const auto [q2, r2] = Poly::divmod(s * s, s + Rational(2));
  EXPECT_EQ(r2, Poly(Rational(4)));
  EXPECT_EQ(q2 * (s + Rational(2)) + r2, s * s);
  EXPECT_THROW(Poly::divmod(s, Poly()), DivisionByZero);
}

TEST(Poly, EvalDerivativeMonic) {
  const Poly p = Rational(2) * s * s + Rational(3) * s + Rational(1);
  EXPECT_EQ(p.eval(Rational(-1, 2)), Rational(0));
  EXPECT_EQ(p.derivative(), Rational(4) * s + Rational(3));
  EXPECT_EQ(p.monic(), s * s + Rational(3, 2) * s + Rational(1, 2));
  EXPECT_EQ(p.pow(0), Poly(Rational(1)));
  EXPECT_EQ((s + Rational(1)).pow(3), s * s * s + Rational(3) * s * s + Rational(3) * s + Rational(1));
  EXPECT_TRUE(Poly(Rational(7)).derivative().is_zero());
}

}  // namespace
}  // namespace hforge
