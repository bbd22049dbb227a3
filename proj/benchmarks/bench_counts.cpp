#include <benchmark/benchmark.h>

#include "compseq/counts.hpp"
#include "compseq/parse.hpp"

namespace {

using compseq::CountOptions;
using compseq::count_table;
using compseq::parse_poly;

// Bit-packed shifted-OR sweep, C = 1.
void BM_CountTableBits(benchmark::State& state) {
  const auto p = parse_poly("j^4");
  const auto k = state.range(0);
  for (auto _ : state) {
    auto t = count_table(p, 1, 1, k);
    benchmark::DoNotOptimize(t.k());
  }
  state.SetItemsProcessed(state.iterations() * k);
}
BENCHMARK(BM_CountTableBits)->RangeMultiplier(8)->Range(1 << 16, 1 << 25)->Unit(benchmark::kMillisecond);

// Saturating 8-bit counters over the same items.
void BM_CountTableCounters(benchmark::State& state) {
  const auto p = parse_poly("j^4");
  const auto k = state.range(0);
  CountOptions opts;
  opts.force_counters = true;
  for (auto _ : state) {
    auto t = count_table(p, 1, 1, k, opts);
    benchmark::DoNotOptimize(t.k());
  }
  state.SetItemsProcessed(state.iterations() * k);
}
BENCHMARK(BM_CountTableCounters)->RangeMultiplier(8)->Range(1 << 16, 1 << 25)->Unit(benchmark::kMillisecond);

void BM_CountTableManyItems(benchmark::State& state) {
  const auto p = parse_poly("binomial(j+2,2)");
  const auto k = state.range(0);
  for (auto _ : state) {
    auto t = count_table(p, 0, 3, k);
    benchmark::DoNotOptimize(t.k());
  }
}
BENCHMARK(BM_CountTableManyItems)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_LargestDeficient(benchmark::State& state) {
  const auto t = count_table(parse_poly("j^3"), 1, 1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compseq::largest_deficient(t));
}
BENCHMARK(BM_LargestDeficient)->Arg(1 << 24);

}  // namespace
