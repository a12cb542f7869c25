#include <benchmark/benchmark.h>

#include <polyurn/closed_forms.hpp>
#include <polyurn/history.hpp>
#include <polyurn/residual.hpp>

using namespace polyurn;

namespace {

const UrnSpec kYp = young_polya().to_spec();

void BM_ExactHistories(benchmark::State& state) {
  const auto n_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_histories(kYp, n_max));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExactHistories)->RangeMultiplier(2)->Range(50, 400)->Unit(benchmark::kMillisecond)->Complexity();

void BM_HistoryCountOnly(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(history_count(kYp, n));
}
BENCHMARK(BM_HistoryCountOnly)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_ParityRecurrence(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(young_polya_2::history_count_exact(n));
}
BENCHMARK(BM_ParityRecurrence)->Arg(200)->Arg(2000);

void BM_FloatPmf(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(black_pmf(kYp, n));
}
BENCHMARK(BM_FloatPmf)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Residuals(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const HistoryTable table = exact_histories(kYp, n);
  for (auto _ : state) benchmark::DoNotOptimize(pde_residual(table, n));
}
BENCHMARK(BM_Residuals)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
