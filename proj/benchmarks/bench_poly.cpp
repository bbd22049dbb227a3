#include <benchmark/benchmark.h>

#include "compseq/certify.hpp"
#include "compseq/parse.hpp"
#include "compseq/poly.hpp"

namespace {

void BM_ParseBinomial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(compseq::parse_poly("binomial(j+5,5)"));
}
BENCHMARK(BM_ParseBinomial);

void BM_RenderRoundTrip(benchmark::State& state) {
  const auto p = compseq::parse_poly("binomial(j+8,8) - 3/7*j^5");
  for (auto _ : state) benchmark::DoNotOptimize(compseq::parse_poly(compseq::render_poly(p)));
}
BENCHMARK(BM_RenderRoundTrip);

void BM_Shift(benchmark::State& state) {
  const auto p = compseq::parse_poly("j^7 + 2*j^3 + 1");
  for (auto _ : state) benchmark::DoNotOptimize(compseq::shift(p, -3));
}
BENCHMARK(BM_Shift);

void BM_CutoffJ5(benchmark::State& state) {
  const auto p = compseq::parse_poly("j^5");
  for (auto _ : state) benchmark::DoNotOptimize(compseq::cutoff(p, 1, 67898771, 3));
}
BENCHMARK(BM_CutoffJ5);

}  // namespace
