#include "hforge/dsl/corpus.hpp"

#include <gtest/gtest.h>

#include <filesystem>

#include "hforge/dsl/parser.hpp"
#include "suites.hpp"

namespace hforge::dsl {
namespace {

const std::filesystem::path kSource = HFORGE_SOURCE_DIR;

std::string shipped_corpus() { return testing::read_file(kSource / "corpus" / "paper.ids"); }

TEST(Corpus, SplitsLines) {
  const std::string text = "# comment\n\nA : n == n\n@xfail B[m=3] : H(n) == n\n";
  const auto r = split_corpus(text);
  ASSERT_TRUE(r);
  ASSERT_EQ(r.value->size(), 2u);
  const auto& a = (*r.value)[0];
  EXPECT_EQ(a.name, "A");
  EXPECT_EQ(a.line, 3u);
  EXPECT_FALSE(a.expected_fail);
  EXPECT_EQ(text.substr(a.begin, a.end - a.begin), " n == n");
  const auto& b = (*r.value)[1];
  EXPECT_EQ(b.name, "B[m=3]");
  EXPECT_TRUE(b.expected_fail);
}

TEST(Corpus, StructuralDiagnostics) {
  const auto missing = split_corpus("no colon here\n");
  ASSERT_FALSE(missing);
  EXPECT_EQ(missing.diagnostics.front().span.begin, 0u);
  EXPECT_FALSE(split_corpus(" : n == n\n"));
  EXPECT_FALSE(split_corpus("TWO WORDS : n == n\n"));
  const auto dup = split_corpus("A : n == n\nA : 1 == 1\n");
  ASSERT_FALSE(dup);
  EXPECT_EQ(dup.diagnostics.front().span.begin, 11u);
}

TEST(Corpus, LoadReportsEveryBadLine) {
  const std::string text = "A : H(n == n\nB : n == n\nC : C(n) == 1\n";
  const auto r = load_corpus(text);
  ASSERT_FALSE(r);
  ASSERT_EQ(r.diagnostics.size(), 2u);
  EXPECT_EQ(locate(text, r.diagnostics[0].span.begin).line, 1u);
  EXPECT_EQ(locate(text, r.diagnostics[1].span.begin).line, 3u);
}

TEST(Corpus, RowKeys) {
  const RowKey k = parse_row_key("ID-14[m=3,printed]");
  EXPECT_EQ(k.id, "ID-14");
  EXPECT_EQ(k.params, (Params{{"m", 3}}));
  EXPECT_EQ(k.variant, "printed");
  EXPECT_EQ(format_row_key(k.id, k.params, k.variant), "ID-14[m=3,printed]");
  const RowKey bare = parse_row_key("ID-5");
  EXPECT_EQ(bare.id, "ID-5");
  EXPECT_TRUE(bare.params.empty());
  EXPECT_TRUE(bare.variant.empty());
  EXPECT_EQ(format_row_key("ID-5", {}, ""), "ID-5");
  EXPECT_EQ(parse_row_key("INTRO-2[corrected]").variant, "corrected");
  EXPECT_EQ(parse_row_key("ID-13[m=4]").params.at("m"), 4);
}

TEST(ShippedCorpus, LoadsAndCoversTheCatalog) {
  const std::string text = shipped_corpus();
  const auto r = load_corpus(text);
  ASSERT_TRUE(r) << format_diagnostics(text, r.diagnostics, "paper.ids");
  std::set<std::string> ids;
  for (const auto& e : *r.value) ids.insert(parse_row_key(e.where.name).id);
  EXPECT_EQ(ids.size(), catalog().size());
}

TEST(ShippedCorpus, PrettyPrintRoundTrips) {
  const std::string text = shipped_corpus();
  const auto lines = split_corpus(text);
  ASSERT_TRUE(lines);
  for (const auto& line : *lines.value) {
    auto parsed = parse_identity(text, line.begin, line.end);
    ASSERT_TRUE(parsed) << line.name;
    const std::string printed = pretty(*parsed.value);
    auto again = parse_identity(printed);
    ASSERT_TRUE(again) << line.name << ": " << printed;
    EXPECT_TRUE(structurally_equal(*parsed.value->lhs, *again.value->lhs)) << line.name;
    EXPECT_TRUE(structurally_equal(*parsed.value->rhs, *again.value->rhs)) << line.name;
    EXPECT_EQ(pretty(*again.value), printed) << line.name;
  }
}

TEST(ShippedCorpus, VerdictsMatchCatalog) {
  const auto o = testing::corpus_matches_catalog(shipped_corpus(), 15, 4);
  EXPECT_TRUE(o.ok()) << o.describe();
}

TEST(GoldenDiagnostics, ByteExact) {
  const auto o = testing::golden_diagnostics(kSource / "tests" / "golden" / "diagnostics");
  EXPECT_EQ(o.cases, 5u);
  EXPECT_TRUE(o.ok()) << o.describe();
}

}  // namespace
}  // namespace hforge::dsl
