#include "hforge/catalog.hpp"

#include <gtest/gtest.h>

#include <set>

#include "hforge/errors.hpp"
#include "hforge/oracle.hpp"
#include "suites.hpp"

namespace hforge {
namespace {

TEST(Catalog, HasAllEntriesOnce) {
  const auto& entries = catalog();
  EXPECT_EQ(entries.size(), 34u);
  std::set<std::string> ids;
  for (const auto& e : entries) {
    EXPECT_TRUE(ids.insert(e.id).second) << e.id;
    EXPECT_FALSE(e.anchor.empty()) << e.id;
    EXPECT_EQ(e.n_min, 1) << e.id;
    EXPECT_FALSE(e.variants.empty()) << e.id;
  }
  for (const char* id : {"THM-2.1", "THM-2.11", "COR-2.5", "ID-1", "ID-20", "INTRO-1", "INTRO-3"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
}

TEST(Catalog, Domains) {
  EXPECT_EQ(lookup("ID-5").domain, Domain::Q);
  EXPECT_EQ(lookup("THM-2.1").domain, Domain::Qsx);
  EXPECT_EQ(lookup("THM-2.6").domain, Domain::Qs);
  EXPECT_EQ(lookup("ID-7").domain, Domain::Qx);
  EXPECT_EQ(to_string(Domain::Qsx), "Q(s,x)");
  EXPECT_TRUE(domain_has_s(Domain::Qsx));
  EXPECT_FALSE(domain_has_x(Domain::Qs));
}

TEST(Catalog, SidesLiveInTheirDomain) {
  for (const auto& e : catalog()) {
    for (const auto& p : e.default_param_grid()) {
      for (const auto& v : e.variants) {
        for (Side side : {Side::Lhs, Side::Rhs}) {
          const BiFrac f = eval_side(e, side, 3, p, v.name);
          if (!domain_has_x(e.domain)) {
            EXPECT_TRUE(f.is_free_of_x()) << e.id;
          }
          if (!domain_has_s(e.domain)) {
            EXPECT_TRUE(f.is_free_of_s()) << e.id;
          }
        }
      }
    }
  }
}

TEST(Catalog, LookupErrors) {
  EXPECT_THROW(lookup("ID-21"), DomainError);
  EXPECT_FALSE(is_known_id("THM-3.1"));
  EXPECT_TRUE(is_known_id("ID-13"));
}

TEST(Catalog, ValidationNamesTheConstraint) {
  const auto& id13 = lookup("ID-13");
  try {
    id13.validate(1, {{"m", 1}});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("m"), std::string::npos) << e.what();
  }
  EXPECT_THROW(id13.validate(0, {{"m", 2}}), DomainError);
  EXPECT_THROW(id13.validate(1, {}), DomainError);
  EXPECT_THROW(lookup("ID-14").validate(1, {{"m", 4}}), DomainError);
  EXPECT_THROW(lookup("ID-5").validate(2, {{"m", 2}}), DomainError);
  EXPECT_THROW(eval_side(lookup("ID-5"), Side::Lhs, 0), DomainError);
  EXPECT_THROW(eval_side(lookup("INTRO-2"), Side::Rhs, 1, {}, "reprinted"), DomainError);
}

TEST(Catalog, ParameterGrids) {
  const auto grid = lookup("ID-13").default_param_grid();
  ASSERT_EQ(grid.size(), 4u);
  EXPECT_EQ(grid.front().at("m"), 2);
  EXPECT_EQ(grid.back().at("m"), 5);
  EXPECT_EQ(lookup("ID-5").default_param_grid(), std::vector<Params>{Params{}});
  EXPECT_EQ(to_string(Params{{"m", 3}}), "m=3");
  EXPECT_EQ(to_string(Params{}), "");
}

TEST(Catalog, Variants) {
  const auto& intro2 = lookup("INTRO-2");
  ASSERT_TRUE(intro2.has_variants());
  EXPECT_EQ(intro2.variant("").name, "printed");
  EXPECT_TRUE(intro2.variant("printed").expected_fail({}));
  EXPECT_FALSE(intro2.variant("corrected").expected_fail({}));
  const auto& id14 = lookup("ID-14");
  EXPECT_FALSE(id14.variant("printed").expected_fail({{"m", 2}}));
  EXPECT_TRUE(id14.variant("printed").expected_fail({{"m", 3}}));
  EXPECT_FALSE(lookup("ID-5").has_variants());
}

TEST(Catalog, PrintedIntro2FailsAtOne) {
  const auto& e = lookup("INTRO-2");
  EXPECT_EQ(eval_side(e, Side::Lhs, 1).as_rational(), Rational(2));
  EXPECT_EQ(eval_side(e, Side::Rhs, 1, {}, "printed").as_rational(), Rational(16));
  EXPECT_EQ(eval_side(e, Side::Rhs, 1, {}, "corrected").as_rational(), Rational(2));
}

TEST(Catalog, PrintedId14ThirdCaseFailsAtOne) {
  const auto& e = lookup("ID-14");
  const Params m3{{"m", 3}};
  EXPECT_EQ(eval_side(e, Side::Lhs, 1, m3).as_rational(), Rational(-8, 3));
  EXPECT_EQ(eval_side(e, Side::Rhs, 1, m3, "printed").as_rational(), Rational(-5, 3));
  EXPECT_EQ(eval_side(e, Side::Rhs, 1, m3, "corrected").as_rational(), Rational(-8, 3));
}

TEST(Catalog, SpotValues) {
  const auto o = testing::spot_values();
  EXPECT_TRUE(o.ok()) << o.describe();
}

TEST(Catalog, DerivativeChains) {
  for (const auto& o : testing::derivative_chains(10)) EXPECT_TRUE(o.ok()) << o.describe();
}

TEST(Catalog, Specializations) {
  for (const auto& o : testing::specializations(15)) EXPECT_TRUE(o.ok()) << o.describe();
}

// (x/(x+1))^(k+1) (1+x)^n collapses to x^(k+1) (1+x)^(n-k-1): both sides are polynomials.
TEST(Catalog, SidesArePolynomialsWithinTheDegreeBound) {
  for (const auto& e : catalog()) {
    for (std::int64_t n = 1; n <= 8; ++n) {
      const auto bound = oracle::degree_bound(e, n);
      for (const auto& p : e.default_param_grid()) {
        for (Side side : {Side::Lhs, Side::Rhs}) {
          const auto poly = eval_side(e, side, n, p).as_polynomial();
          ASSERT_TRUE(poly.has_value()) << e.id << " n=" << n;
          EXPECT_LE(poly->degree_s(), bound.s) << e.id << " n=" << n;
          EXPECT_LE(poly->degree_x(), bound.x) << e.id << " n=" << n;
        }
      }
    }
  }
}

// Sides agree as polynomials; x-degree can drop below n when the top terms vanish
// (ID-7 has H(0) at k = n, THM-2.4 cancels entirely at n = 1).
TEST(Catalog, BivariateSidesArePolynomialsOfXDegreeAtMostN) {
  for (const char* id : {"THM-2.1", "THM-2.2", "THM-2.4", "ID-7", "ID-9"}) {
    for (std::int64_t n = 1; n <= 8; ++n) {
      const auto lhs = eval_side(lookup(id), Side::Lhs, n).as_polynomial();
      const auto rhs = eval_side(lookup(id), Side::Rhs, n).as_polynomial();
      ASSERT_TRUE(lhs && rhs);
      EXPECT_LE(lhs->degree_x(), n) << id;
      EXPECT_TRUE(*lhs == *rhs) << id << " n=" << n;
    }
  }
}

}  // namespace
}  // namespace hforge
