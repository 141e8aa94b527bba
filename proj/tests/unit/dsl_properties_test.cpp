#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <string>

#include "hforge/dsl/corpus.hpp"
#include "hforge/dsl/eval.hpp"
#include "hforge/dsl/parser.hpp"
#include "suites.hpp"

namespace hforge::dsl {
namespace {

constexpr std::size_t kCases = 1000;

// Random expression text over the binder k. Denominators are chosen so the
// body is defined for every k >= 0.
class SourceGen {
 public:
  explicit SourceGen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  std::string body(int depth) {
    if (depth == 0 || integer(0, 3) == 0) return atom();
    const std::string a = body(depth - 1);
    switch (integer(0, 8)) {
      case 0: return "(" + a + " + " + body(depth - 1) + ")";
      case 1: return "(" + a + " - " + body(depth - 1) + ")";
      case 2: return a + "*" + body(depth - 1);
      case 3: return "(" + a + ")/(k+1)";
      case 4: return "(" + a + ")/(x+1)";
      case 5: return "-(" + a + ")";
      case 6: return "(" + a + ")^2";
      case 7: return "(" + a + ")/(s+k+1)";
      default: return a + "*x^k";
    }
  }

 private:
  std::string atom() {
    static const char* atoms[] = {"k",        "n",      "3",         "H(k)", "C(n,k)", "CS(k,2)",
                                  "PSID(k+1,1)", "x",   "s",         "Hr(k,2)", "1/2", "(-1)^k",
                                  "PSI1D(k+2,1)", "C(k+n,k)", "2^k"};
    return atoms[integer(0, std::size(atoms) - 1)];
  }
  std::mt19937_64 rng_;
};

std::string replace_binder(const std::string& body, std::int64_t j) {
  std::string out;
  for (char c : body) out += c == 'k' ? "(" + std::to_string(j) + ")" : std::string(1, c);
  return out;
}

BiFrac eval_src(const std::string& src, std::int64_t n) {
  auto c = compile_expr(src);
  if (!c) throw std::logic_error(src + "\n" + format_diagnostics(src, c.diagnostics));
  return eval(*c.value, n);
}

TEST(DslProperties, SumEqualsSumOfInstances) {
  SourceGen g(7);
  for (std::size_t i = 0; i < kCases; ++i) {
    const std::string body = g.body(3);
    const auto lo = g.integer(0, 3), hi = g.integer(-1, 5), n = g.integer(1, 5);
    const std::string src = "sum(k=" + std::to_string(lo) + ".." + std::to_string(hi) + ", " + body + ")";
    BiFrac expected;
    for (std::int64_t j = lo; j <= hi; ++j) expected += eval_src(replace_binder(body, j), n);
    ASSERT_TRUE(bifrac_eq(eval_src(src, n), expected)) << src << " at n=" << n;
  }
}

TEST(DslProperties, PrettyRoundTripPreservesTreeAndValue) {
  SourceGen g(11);
  for (std::size_t i = 0; i < kCases; ++i) {
    const std::string src = "sum(k=0..n, " + g.body(3) + ") - n/2^n";
    auto parsed = parse_expr(src);
    ASSERT_TRUE(parsed) << src;
    const std::string printed = pretty(**parsed.value);
    auto again = parse_expr(printed);
    ASSERT_TRUE(again) << src << " -> " << printed;
    ASSERT_TRUE(structurally_equal(**parsed.value, **again.value)) << src << " -> " << printed;
    ASSERT_EQ(pretty(**again.value), printed);
    const auto n = g.integer(1, 4);
    ASSERT_TRUE(bifrac_eq(eval_src(src, n), eval_src(printed, n))) << src;
  }
}

TEST(DslProperties, EvaluationIsLinearOverAddition) {
  SourceGen g(13);
  for (std::size_t i = 0; i < kCases; ++i) {
    const std::string a = g.body(2), b = g.body(2);
    const std::string sa = "sum(k=0..n, " + a + ")", sb = "sum(k=0..n, " + b + ")";
    const auto n = g.integer(1, 4);
    ASSERT_TRUE(bifrac_eq(eval_src(sa + " + " + sb, n), eval_src(sa, n) + eval_src(sb, n))) << sa << " + " << sb;
    ASSERT_TRUE(bifrac_eq(eval_src("sum(k=0..n, " + a + " + " + b + ")", n), eval_src(sa, n) + eval_src(sb, n)));
  }
}

TEST(DslProperties, DiagnosticSpansStayInsideTheSource) {
  const std::string corpus = testing::read_file(std::filesystem::path(HFORGE_SOURCE_DIR) / "corpus" / "paper.ids");
  const auto lines = split_corpus(corpus);
  ASSERT_TRUE(lines);
  std::mt19937_64 rng(17);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const std::string noise[] = {"(", ")", "==", "=", ".", "..", ",", "^", "*", "/", "+", "-", "k", "x",
                               "Q", "1", " ", ":", "#", "@xfail ", "sum(", "\xce\xb1", "\n", "0"};
  std::size_t with_errors = 0;
  for (std::size_t i = 0; i < kCases; ++i) {
    const auto& line = (*lines.value)[pick(lines.value->size())];
    std::size_t start = corpus.rfind('\n', line.begin);
    start = start == std::string::npos ? 0 : start + 1;
    std::string text = corpus.substr(start, line.end - start);
    const auto edits = 1 + pick(3);
    for (std::size_t e = 0; e < edits && !text.empty(); ++e) {
      const auto at = pick(text.size());
      switch (pick(3)) {
        case 0: text.erase(at, 1 + pick(3)); break;
        case 1: text.insert(at, noise[pick(std::size(noise))]); break;
        default: text = text.substr(0, at) + text.substr(pick(text.size()));
      }
    }
    Result<std::vector<CorpusEntry>> r;
    ASSERT_NO_THROW(r = load_corpus(text)) << text;
    if (!r) ++with_errors;
    for (const auto& d : r.diagnostics) {
      ASSERT_LE(d.span.begin, d.span.end) << text;
      ASSERT_LE(d.span.end, text.size()) << text << "\n" << d.message;
      ASSERT_NO_THROW((void)format_diagnostic(text, d));
    }
  }
  EXPECT_GT(with_errors, kCases / 2);
}

}  // namespace
}  // namespace hforge::dsl
