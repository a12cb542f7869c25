#include <benchmark/benchmark.h>

#include <polyurn/distributions.hpp>
#include <polyurn/random.hpp>
#include <polyurn/simulate.hpp>

using namespace polyurn;

namespace {

void BM_PhiloxWords(benchmark::State& state) {
  Philox4x32 rng(1, 0);
  std::uint32_t acc = 0;
  for (auto _ : state) {
    for (int i = 0; i < 1024; ++i) acc ^= rng();
  }
  benchmark::DoNotOptimize(acc);
  state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_PhiloxWords);

void BM_BoundedDraw(benchmark::State& state) {
  Philox4x32 rng(1, 0);
  std::uint64_t acc = 0;
  for (auto _ : state) {
    for (std::uint64_t b = 1; b <= 1024; ++b) acc += rng.below(b);
  }
  benchmark::DoNotOptimize(acc);
  state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_BoundedDraw);

void BM_UrnRun(benchmark::State& state) {
  const UrnSpec spec = young_polya().to_spec();
  const auto n = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t j = 0;
  for (auto _ : state) {
    Philox4x32 rng(1, j++);
    benchmark::DoNotOptimize(simulate_final_black(spec, n, rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_UrnRun)->Arg(1000)->Arg(10000);

void BM_Experiment(benchmark::State& state) {
  const UrnSpec spec = young_polya().to_spec();
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(spec, 10000, 1000, 1, 1));
  state.SetItemsProcessed(state.iterations() * 1000 * 10000);
}
BENCHMARK(BM_Experiment)->Unit(benchmark::kMillisecond);

void BM_GenGammaSample(benchmark::State& state) {
  Philox4x32 rng(2, 0);
  const GenGammaParams g(1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(gengamma_sample(rng, g));
}
BENCHMARK(BM_GenGammaSample);

}  // namespace

BENCHMARK_MAIN();
