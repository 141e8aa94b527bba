#include <benchmark/benchmark.h>

#include <cstdint>

#include "hforge/bifrac.hpp"
#include "hforge/catalog.hpp"
#include "hforge/dsl/checker.hpp"
#include "hforge/dsl/eval.hpp"
#include "hforge/special_values.hpp"
#include "hforge/verify.hpp"

namespace {

using hforge::BiFrac;
using hforge::Rational;

// (1+x)^n / (s+1)^n style operands, sized by n.
BiFrac operand(std::int64_t n, std::int64_t shift) {
  BiFrac one(Rational(1));
  BiFrac num = one, den = one;
  for (std::int64_t j = 0; j < n; ++j) {
    num = num * (one + BiFrac::x());
    den = den * (BiFrac::s() + BiFrac(Rational(shift + j)));
  }
  return num / den;
}

void BM_BiFracAdd(benchmark::State& state) {
  const auto a = operand(state.range(0), 1);
  const auto b = operand(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_BiFracAdd)->RangeMultiplier(2)->Range(2, 16);

void BM_BiFracMul(benchmark::State& state) {
  const auto a = operand(state.range(0), 1);
  const auto b = operand(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_BiFracMul)->RangeMultiplier(2)->Range(2, 16);

// Fresh instance per iteration so the cost of building the value is measured.
void BM_BinomShiftCold(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    hforge::special::SpecialValues values(false);
    benchmark::DoNotOptimize(values.binom_shift(n, n));
  }
}
BENCHMARK(BM_BinomShiftCold)->RangeMultiplier(2)->Range(4, 64);

void BM_PsiDiffCold(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    hforge::special::SpecialValues values(false);
    benchmark::DoNotOptimize(values.psi_diff(2 * n, 0));
  }
}
BENCHMARK(BM_PsiDiffCold)->RangeMultiplier(2)->Range(4, 64);

void BM_PsiDiffMemo(benchmark::State& state) {
  const auto n = state.range(0);
  hforge::special::SpecialValues values(true);
  values.psi_diff(2 * n, 0);
  for (auto _ : state) benchmark::DoNotOptimize(values.psi_diff(2 * n, 0));
}
BENCHMARK(BM_PsiDiffMemo)->RangeMultiplier(2)->Range(4, 64);

void BM_VerifyThm21(benchmark::State& state) {
  const auto& entry = hforge::lookup("THM-2.1");
  const auto n = state.range(0);
  hforge::VerifyOptions opts;
  opts.keep_timing = false;
  for (auto _ : state) benchmark::DoNotOptimize(hforge::verify(entry, n, n, {}, opts));
}
BENCHMARK(BM_VerifyThm21)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

void BM_DslEval(benchmark::State& state) {
  const auto expr = hforge::dsl::compile_expr("sum(k=0..n, C(n,k)*(H(n)-H(n-k))*x^k)");
  if (!expr) {
    state.SkipWithError("expression failed to compile");
    return;
  }
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(hforge::dsl::eval(*expr.value, n));
}
BENCHMARK(BM_DslEval)->RangeMultiplier(2)->Range(4, 32);

}  // namespace

BENCHMARK_MAIN();
