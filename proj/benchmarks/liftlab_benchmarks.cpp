#include <benchmark/benchmark.h>

#include "liftlab/colouring.hpp"
#include "liftlab/oracle.hpp"
#include "liftlab/stats.hpp"

namespace {

using namespace liftlab;

void BM_RandomPermutation(benchmark::State& state) {
  Rng rng(1);
  const auto h = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Permutation::random(h, rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RandomPermutation)->Arg(1000)->Arg(100000);

void BM_LazyExposure(benchmark::State& state) {
  const BaseGraph base = BaseGraph::join(3, 2);
  const auto h = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    ExposureState es(base, h, ++seed);
    for (std::uint32_t j = 0; j < 100; ++j)
      benchmark::DoNotOptimize(es.expose(base.join_edge(0, 0), Side::Tail, j));
  }
}
BENCHMARK(BM_LazyExposure)->Arg(10000);

void BM_Trial(benchmark::State& state) {
  const BaseGraph base = BaseGraph::join(3, 2);
  const auto h = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run(base, h, ++seed));
}
BENCHMARK(BM_Trial)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const BaseGraph base = BaseGraph::join(3, 2);
  std::vector<SimpleGraph> graphs;
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    ExposureState es(base, static_cast<std::size_t>(state.range(0)), seed);
    graphs.push_back(SimpleGraph::from_lift(es.expose_all()));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(graphs[i++ % graphs.size()], 5));
}
BENCHMARK(BM_Oracle)->Arg(4)->Arg(8);

void BM_ContinuousGaps(benchmark::State& state) {
  Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(sample_continuous_gaps(100, rng));
}
BENCHMARK(BM_ContinuousGaps);

}  // namespace

BENCHMARK_MAIN();
