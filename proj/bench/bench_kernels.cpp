#include <benchmark/benchmark.h>

#include "iasgl/classification.hpp"
#include "iasgl/parallel.hpp"
#include "iasgl/search.hpp"

using namespace iasgl;

namespace {

GroundSet segment(std::size_t n) {
  std::vector<Element> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return GroundSet(IntegerSet(std::move(v)));
}

void BM_ClassifySerial(benchmark::State& state) {
  GroundSet x = segment(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::classification_flags_serial(x, SummandMode::DistinctLabels));
}

void BM_ClassifyParallel(benchmark::State& state) {
  GroundSet x = segment(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::classification_flags_parallel(x, SummandMode::DistinctLabels));
  state.counters["threads"] = static_cast<double>(worker_count());
}

// K_4 over {0,1,3}: the whole tree is explored, so work is fixed.
SearchConfig exhaustive_config() {
  SearchConfig cfg;
  cfg.time_budget_ms = 600'000;
  return cfg;
}

void BM_SearchSerial(benchmark::State& state) {
  Graph g = generate(GraphKind::Complete, 4);
  GroundSet x(IntegerSet{0, 1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(kernels::search_iasgl_serial(g, x, exhaustive_config()));
}

void BM_SearchParallel(benchmark::State& state) {
  Graph g = generate(GraphKind::Complete, 4);
  GroundSet x(IntegerSet{0, 1, 3});
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::search_iasgl_parallel(g, x, exhaustive_config(), worker_count()));
}

void BM_SweepCycle6(benchmark::State& state) {
  Graph g = generate(GraphKind::Cycle, 6);
  SearchConfig cfg = exhaustive_config();
  for (auto _ : state) benchmark::DoNotOptimize(sweep_ground_sets(g, 3, static_cast<Element>(state.range(0)), cfg));
}

}  // namespace

BENCHMARK(BM_ClassifySerial)->DenseRange(6, 10, 2);
BENCHMARK(BM_ClassifyParallel)->DenseRange(6, 10, 2);
BENCHMARK(BM_SearchSerial);
BENCHMARK(BM_SearchParallel);
BENCHMARK(BM_SweepCycle6)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
