#include <benchmark/benchmark.h>

#include "pawns/closed_forms.hpp"
#include "pawns/decomposition.hpp"
#include "pawns/enumeration.hpp"
#include "pawns/tiling.hpp"
#include "pawns/transfer.hpp"

namespace {

using namespace pawns;

// Arguments: height, columns.
void BM_TransferCount(benchmark::State& state) {
  const auto h = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const auto pats = ForbiddenPatternSet::m_set();
  for (auto _ : state) benchmark::DoNotOptimize(count_via_transfer(h, n, pats));
}
BENCHMARK(BM_TransferCount)->Args({4, 100})->Args({8, 100})->Args({12, 100})->Args({16, 50});

void BM_TransferSequence(benchmark::State& state) {
  const auto pats = ForbiddenPatternSet::l_set();
  for (auto _ : state) benchmark::DoNotOptimize(count_sequence_via_transfer(10, 200, pats));
}
BENCHMARK(BM_TransferSequence);

// Argument: cells on a board with 4 rows.
void BM_OracleEnumeration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0)) / 4;
  const auto pats = ForbiddenPatternSet::m_set();
  for (auto _ : state) benchmark::DoNotOptimize(count_by_enumeration({4, n}, pats));
}
BENCHMARK(BM_OracleEnumeration)->Arg(12)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_DominantEigenvalue(benchmark::State& state) {
  const auto h = static_cast<std::size_t>(state.range(0));
  const auto pats = ForbiddenPatternSet::m_set();
  for (auto _ : state) benchmark::DoNotOptimize(dominant_eigenvalue(h, pats));
}
BENCHMARK(BM_DominantEigenvalue)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_TilingProfileDp(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_tilings(k, k));
}
BENCHMARK(BM_TilingProfileDp)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_IndependentSetDp(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto black = split_by_color({m, 80 / m}).first;
  for (auto _ : state) benchmark::DoNotOptimize(count_independent_sets(black));
}
BENCHMARK(BM_IndependentSetDp)->Arg(4)->Arg(6)->Arg(8);

void BM_RadicalFormulaExact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(table1_M(3, 500));
}
BENCHMARK(BM_RadicalFormulaExact);

}  // namespace

BENCHMARK_MAIN();
