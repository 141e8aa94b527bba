#include <gtest/gtest.h>

#include "suites.hpp"

namespace hforge::testing {
namespace {

constexpr std::uint64_t kSeed = 0x5eed;
constexpr std::size_t kCases = 1000;

void expect_ok(const Outcome& o) {
  EXPECT_GE(o.cases, kCases);
  EXPECT_TRUE(o.ok()) << o.describe();
}

TEST(KernelProperties, RationalFieldAxioms) { expect_ok(rational_field_axioms(kSeed, kCases)); }
TEST(KernelProperties, PolyRingAxioms) { expect_ok(poly_ring_axioms(kSeed, kCases)); }
TEST(KernelProperties, BiPolyRingAxioms) { expect_ok(bipoly_ring_axioms(kSeed, kCases)); }
TEST(KernelProperties, RatFuncFieldAxioms) { expect_ok(ratfunc_field_axioms(kSeed, kCases)); }
TEST(KernelProperties, BiFracFieldAxioms) { expect_ok(bifrac_field_axioms(kSeed, kCases)); }
TEST(KernelProperties, GcdIsMonicCommonDivisor) { expect_ok(gcd_properties(kSeed, kCases)); }
TEST(KernelProperties, NormalizeIsIdempotentAndScaleInvariant) { expect_ok(normalize_properties(kSeed, kCases)); }
TEST(KernelProperties, BifracEqIsAnEquivalence) { expect_ok(bifrac_equivalence(kSeed, kCases)); }
TEST(KernelProperties, EvalCommutesWithArithmetic) { expect_ok(eval_homomorphism(kSeed, kCases)); }
TEST(KernelProperties, PsiDifferencesTelescope) { expect_ok(psi_telescoping(kSeed, kCases)); }
TEST(KernelProperties, PascalAndAbsorption) { expect_ok(pascal_absorption(kSeed, kCases)); }

// A second seed so a lucky stream cannot hide a bug.
TEST(KernelProperties, AllLawsUnderAnotherSeed) {
  for (const auto& o : kernel_properties(0xfeedface, kCases)) expect_ok(o);
}

}  // namespace
}  // namespace hforge::testing
