#include "hforge/dsl/parser.hpp"

#include <gtest/gtest.h>

namespace hforge::dsl {
namespace {

ExprPtr parse_ok(std::string_view src) {
  auto r = parse_expr(src);
  EXPECT_TRUE(r) << src << "\n" << format_diagnostics(src, r.diagnostics);
  return r ? std::move(*r.value) : nullptr;
}

Diagnostic parse_error(std::string_view src) {
  auto r = parse_expr(src);
  EXPECT_FALSE(r) << src;
  EXPECT_FALSE(r.diagnostics.empty());
  return r.diagnostics.empty() ? Diagnostic{} : r.diagnostics.front();
}

std::string roundtrip(std::string_view src) { return pretty(*parse_ok(src)); }

TEST(Parser, EulerIdentity) {
  const std::string src = "sum(k=1..n, (-1)^(k-1)/k * C(n,k)) == H(n)";
  auto r = parse_identity(src);
  ASSERT_TRUE(r);
  const Identity& id = *r.value;
  EXPECT_EQ(id.lhs->kind, Kind::Sum);
  EXPECT_EQ(id.lhs->name, "k");
  ASSERT_EQ(id.lhs->kids.size(), 3u);
  EXPECT_EQ(id.lhs->kids[2]->kind, Kind::Mul);
  EXPECT_EQ(id.rhs->kind, Kind::Call);
  EXPECT_EQ(id.rhs->name, "H");
  EXPECT_EQ(id.lhs->span, (Span{0, 34}));
  EXPECT_EQ(id.rhs->span, (Span{38, 42}));
}

TEST(Parser, ExpressionEntryPoint) {
  auto e = parse_ok("sum(k=1..n, x^k)");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind, Kind::Sum);
  EXPECT_EQ(e->kids[2]->kind, Kind::Pow);
}

TEST(Parser, UnclosedParen) {
  const auto d = parse_error("H(n");
  EXPECT_EQ(d.message, "unclosed '('");
  EXPECT_EQ(d.span, (Span{3, 3}));
  ASSERT_TRUE(d.hint.has_value());
  EXPECT_NE(d.hint->find("byte 1"), std::string::npos);
}

TEST(Parser, Precedence) {
  EXPECT_EQ(roundtrip("1 + 2 * 3"), "1 + 2*3");
  EXPECT_EQ(roundtrip("(1 + 2) * 3"), "(1 + 2)*3");
  EXPECT_EQ(roundtrip("a - (b - c)"), "a - (b - c)");
  EXPECT_EQ(roundtrip("(a - b) - c"), "a - b - c");
  EXPECT_EQ(roundtrip("-x^2"), "-x^2");
  EXPECT_EQ(roundtrip("(-x)^2"), "(-x)^2");
  EXPECT_EQ(roundtrip("a / (b * c)"), "a/(b*c)");
  EXPECT_EQ(roundtrip("x^(k+1)"), "x^(k + 1)");
}

TEST(Parser, UnaryMinusBindsLooserThanPower) {
  auto e = parse_ok("-2^2");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind, Kind::Neg);
  EXPECT_EQ(e->kids[0]->kind, Kind::Pow);
}

TEST(Parser, RationalLiterals) {
  auto half = parse_ok("1/2");
  ASSERT_TRUE(half);
  EXPECT_EQ(half->kind, Kind::RatLit);
  EXPECT_EQ(half->literal, Rational(1, 2));

  auto pow = parse_ok("1/2^k");
  ASSERT_TRUE(pow);
  EXPECT_EQ(pow->kind, Kind::Div);
  EXPECT_EQ(pow->kids[1]->kind, Kind::Pow);

  auto chain = parse_ok("a/1/2");
  ASSERT_TRUE(chain);
  EXPECT_EQ(chain->kind, Kind::Div);
  EXPECT_EQ(chain->kids[0]->kind, Kind::Div);

  auto neg = parse_ok("-3/4");
  ASSERT_TRUE(neg);
  EXPECT_EQ(neg->kind, Kind::Neg);
  EXPECT_EQ(neg->kids[0]->kind, Kind::RatLit);
}

TEST(Parser, PowerIsNotAssociative) {
  const auto d = parse_error("2^n^2");
  EXPECT_EQ(d.message, "'^' is not associative");
  EXPECT_EQ(d.span, (Span{3, 4}));
  EXPECT_TRUE(parse_expr("(2^n)^2"));
  EXPECT_TRUE(parse_expr("2^(n^2)"));
}

TEST(Parser, MalformedRange) {
  const auto d = parse_error("sum(k=1,n, k)");
  EXPECT_EQ(d.message, "malformed range: expected '..', found ','");
  EXPECT_EQ(d.span, (Span{7, 8}));
  const auto lone = parse_error("sum(k=1.n, k)");
  EXPECT_EQ(lone.span.begin, 7u);
}

TEST(Parser, OtherErrors) {
  EXPECT_EQ(parse_error("1/0").message, "zero denominator in literal");
  EXPECT_EQ(parse_error("n)").message, "unmatched ')'");
  EXPECT_EQ(parse_error("n == n").message, "unexpected '==' in an expression");
  EXPECT_FALSE(parse_error("").message.empty());
  EXPECT_FALSE(parse_error("n + ").message.empty());
  EXPECT_FALSE(parse_error("H(n,)").message.empty());
  const auto id = parse_identity("H(n) = n");
  ASSERT_FALSE(id);
  EXPECT_EQ(id.diagnostics.front().message, "expected '==', found '='");
}

TEST(Parser, NonAsciiRejectedWithSpan) {
  const std::string src = "H(n) \xce\xb1";
  const auto d = parse_error(src);
  EXPECT_EQ(d.span.begin, 5u);
  EXPECT_LE(d.span.end, src.size());
}

TEST(Parser, SubrangeSpansAreAbsolute) {
  const std::string src = "NAME : H(n) == n";
  auto r = parse_identity(src, 7);
  ASSERT_TRUE(r);
  EXPECT_EQ(r.value->lhs->span, (Span{7, 11}));
  EXPECT_EQ(r.value->rhs->span, (Span{15, 16}));
}

TEST(Parser, ParenthesizedSpanIncludesParens) {
  auto e = parse_ok("(n + 1)*2");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kids[0]->span, (Span{0, 7}));
}

TEST(Printer, RoundTripIsStructural) {
  for (const char* src :
       {"sum(k=0..n, CS(n,k)*x^k)", "(1+x)^n*(1 + s*sum(k=0..n-1, CS(k,k)/(k+1)*(x/(x+1))^(k+1)))",
        "-2/n^2", "((-1)^n - 1)/(n+1)", "4^n/(n*C(2*n,n))", "2/3/4", "2/(3/4)", "-(-n)", "1/2*x", "(1/2)^n",
        "-(1/2)", "a - -b", "2*(3/4)", "-1/2", "(-1)^(k-1)/k^2"}) {
    auto e = parse_ok(src);
    ASSERT_TRUE(e) << src;
    const std::string printed = pretty(*e);
    auto back = parse_expr(printed);
    ASSERT_TRUE(back) << src << " -> " << printed;
    EXPECT_TRUE(structurally_equal(*e, **back.value)) << src << " -> " << printed;
  }
}

TEST(Printer, Identity) {
  auto r = parse_identity("H(n)==H(n-1)+1/n");
  ASSERT_TRUE(r);
  EXPECT_EQ(pretty(*r.value), "H(n) == H(n - 1) + 1/n");
}

TEST(Diagnostics, Format) {
  const std::string src = "A\nBB H(n";
  const Diagnostic d{Severity::Error, "unclosed '('", Span{7, 7}, "close it"};
  EXPECT_EQ(format_diagnostic(src, d, "f.ids"), "f.ids:2:6: error: unclosed '(' [7,7)\n  BB H(n\n       ^\n  hint: close it\n");
  const Location at = locate(src, 2);
  EXPECT_EQ(at.line, 2u);
  EXPECT_EQ(at.column, 1u);
}

}  // namespace
}  // namespace hforge::dsl
