#include <benchmark/benchmark.h>

#include <vector>

#include <polyurn/prodgengamma.hpp>
#include <polyurn/tableau.hpp>
#include <polyurn/tree.hpp>

using namespace polyurn;

namespace {

// The largest N = 12 shape, p = 1, l = 2, n = 3.
void BM_HookWalkRows(benchmark::State& state) {
  const TableauShape shape = make_shape(1, 2, 3);
  HookWalkSampler sampler(shape.diagram);
  Philox4x32 rng(3, 0);
  std::vector<std::uint32_t> rows(shape.N());
  for (auto _ : state) {
    sampler.sample_rows(rng, rows);
    benchmark::DoNotOptimize(rows.data());
  }
}
BENCHMARK(BM_HookWalkRows);

void BM_HookWalkTableau(benchmark::State& state) {
  const TableauShape shape = make_shape(2, 1, static_cast<std::uint32_t>(state.range(0)));
  HookWalkSampler sampler(shape.diagram);
  Philox4x32 rng(3, 1);
  Tableau t;
  for (auto _ : state) {
    sampler.sample_into(rng, t);
    benchmark::DoNotOptimize(t.entries.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(shape.N()));
}
BENCHMARK(BM_HookWalkTableau)->Arg(10)->Arg(60)->Unit(benchmark::kMicrosecond);

void BM_CornerEntry(benchmark::State& state) {
  const TableauShape shape = make_shape(2, 1, static_cast<std::uint32_t>(state.range(0)));
  HookWalkSampler sampler(shape.diagram);
  Philox4x32 rng(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample_corner_entry(rng));
}
BENCHMARK(BM_CornerEntry)->Arg(60)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_EnumerateSyt(benchmark::State& state) {
  const TableauShape shape = make_shape(2, 2, 2);  // N = 12
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_syt(shape.diagram, [](const Tableau&) {}));
}
BENCHMARK(BM_EnumerateSyt)->Unit(benchmark::kMillisecond);

void BM_TreeLabelLaw(benchmark::State& state) {
  const TreePair trees = build_trees(2, 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(extension_label_counts(trees.big, 3));
}
BENCHMARK(BM_TreeLabelLaw)->Unit(benchmark::kMillisecond);

void BM_ProdGenGammaTable(benchmark::State& state) {
  const ProdGenGammaSpec spec(2, 1, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ProdGenGammaCdf(spec, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ProdGenGammaTable)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

BENCHMARK_MAIN();
