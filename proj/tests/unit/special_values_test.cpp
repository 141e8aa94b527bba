#include "hforge/special_values.hpp"

#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "hforge/errors.hpp"
#include "suites.hpp"

namespace hforge::special {
namespace {

TEST(Harmonic, Values) {
  EXPECT_EQ(harmonic(0), Rational(0));
  EXPECT_EQ(harmonic(3), Rational(11, 6));
  EXPECT_EQ(harmonic(6), Rational(49, 20));
  EXPECT_EQ(harmonic_gen(0, 2), Rational(0));
  EXPECT_EQ(harmonic_gen(2, 2), Rational(5, 4));
  EXPECT_EQ(harmonic_gen(3, 2), Rational(49, 36));
  EXPECT_EQ(harmonic_gen(2, 3), Rational(9, 8));
  EXPECT_THROW(harmonic(-1), DomainError);
  EXPECT_THROW(harmonic_gen(3, 0), DomainError);
}

TEST(Harmonic, CacheRecurrence) {
  HarmonicCache cache;
  for (std::int64_t n = 1; n <= 200; ++n) {
    ASSERT_EQ(cache.get(n, 1) - cache.get(n - 1, 1), Rational(1, n));
    ASSERT_EQ(cache.get(n, 2) - cache.get(n - 1, 2), Rational(1, n * n));
  }
  EXPECT_GE(cache.high_water_mark(), 200);
  EXPECT_EQ(cache.get(0, 1), Rational(0));
}

TEST(Harmonic, ConcurrentReadersSeeOneTable) {
  const SpecialValues values(true);
  std::vector<Rational> got(8);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < got.size(); ++t) {
      pool.emplace_back([&, t] {
        for (std::int64_t n = 0; n <= 300; n += static_cast<std::int64_t>(t) + 1) (void)values.harmonic(n);
        got[t] = values.harmonic(300);
      });
    }
  }
  const SpecialValues plain(false);
  for (const auto& g : got) EXPECT_EQ(g, plain.harmonic(300));
}

TEST(Binomial, Integer) {
  EXPECT_EQ(binom_int(5, 2), Rational(10));
  EXPECT_EQ(binom_int(3, 5), Rational(0));
  EXPECT_EQ(binom_int(3, -1), Rational(0));
  EXPECT_EQ(binom_int(6, 3), Rational(20));
  EXPECT_EQ(binom_int(0, 0), Rational(1));
  EXPECT_EQ(binom_int(60, 30).to_string(), "118264581564861424");
}

TEST(Binomial, Shifted) {
  EXPECT_EQ(binom_shift(7, 0), RatFunc(Rational(1)));
  EXPECT_EQ(binom_shift(2, 1).to_string(), "s + 2");
  EXPECT_EQ(binom_shift(0, 2).eval(Rational(-1, 2)), Rational(3, 8));
  for (std::int64_t a = 0; a <= 12; ++a) {
    for (std::int64_t k = 0; k <= a; ++k) {
      const RatFunc f = binom_shift(a, k);
      ASSERT_TRUE(f.is_polynomial());
      ASSERT_EQ(f.num().degree(), k);
      ASSERT_EQ(f.eval(Rational(0)), binom_int(a, k));
    }
  }
}

TEST(PsiDiff, Values) {
  EXPECT_EQ(psi_diff(1, 0), RatFunc(Rational(1)) / RatFunc::s());
  EXPECT_EQ(psi_diff(4, 2).eval(Rational(0)), Rational(5, 6));  // H_3 - H_1
  EXPECT_EQ(psi_diff(1, 0).eval(Rational(-1, 2)), Rational(-2));
  EXPECT_EQ(psi_diff(1, 0).eval(Rational(1, 2) - Rational(1)), Rational(-2));
  EXPECT_TRUE(psi_diff(5, 5).is_zero());
  EXPECT_THROW(psi_diff(1, 2), DomainError);
  EXPECT_THROW(psi_diff(-1, -2), DomainError);
}

TEST(PsiDiff, PolesAtNegativeShifts) {
  const RatFunc f = psi_diff(5, 2);
  for (std::int64_t j = 2; j <= 4; ++j) EXPECT_THROW((void)f.eval(Rational(-j)), PoleError);
  EXPECT_NO_THROW((void)f.eval(Rational(-1)));
  EXPECT_NO_THROW((void)f.eval(Rational(-5)));
}

TEST(Psi1Diff, Values) {
  const RatFunc inv_s = RatFunc(Rational(1)) / RatFunc::s();
  EXPECT_EQ(psi1_diff(1, 0), -(inv_s * inv_s));
  EXPECT_EQ(psi1_diff(3, 1).eval(Rational(0)), Rational(-5, 4));
  EXPECT_TRUE(psi1_diff(2, 2).is_zero());
  EXPECT_THROW(psi1_diff(0, 1), DomainError);
}

TEST(PsiDiff, IntegerBridge) {
  for (std::int64_t a = 1; a <= 40; ++a) {
    for (std::int64_t b = 1; b <= a; ++b) {
      ASSERT_EQ(psi_diff(a, b).eval(Rational(0)), harmonic(a - 1) - harmonic(b - 1)) << a << "," << b;
      ASSERT_EQ(psi1_diff(a, b).eval(Rational(0)), harmonic_gen(b - 1, 2) - harmonic_gen(a - 1, 2)) << a << "," << b;
    }
  }
}

TEST(BinomNeg3Half, Values) {
  EXPECT_EQ(binom_neg3half(0), Rational(1));
  EXPECT_EQ(binom_neg3half(1), Rational(-3, 2));
  EXPECT_EQ(binom_neg3half(2), Rational(15, 8));
  EXPECT_THROW(binom_neg3half(-1), DomainError);
}

TEST(SpecialValues, MemoizedAndPlainAgree) {
  const SpecialValues memo(true), plain(false);
  for (std::int64_t a = 0; a <= 15; ++a) {
    for (std::int64_t b = 0; b <= a; ++b) {
      ASSERT_EQ(memo.psi_diff(a, b), plain.psi_diff(a, b));
      ASSERT_EQ(memo.psi1_diff(a, b), plain.psi1_diff(a, b));
      ASSERT_EQ(memo.binom_shift(a, b), plain.binom_shift(a, b));
    }
  }
}

TEST(HalfIntegerReductions, MatchClosedForms) {
  for (const auto& o : hforge::testing::half_integer_reductions()) EXPECT_TRUE(o.ok()) << o.describe();
}

}  // namespace
}  // namespace hforge::special
