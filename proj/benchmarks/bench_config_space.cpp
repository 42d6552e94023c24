#include <benchmark/benchmark.h>

#include "beacon/config_space.hpp"
#include "beacon/library.hpp"
#include "beacon/perturb.hpp"

namespace {

using namespace beacon;

void BM_ExploreCounterexample(benchmark::State& state) {
  const Instance ce = builtin_counterexample();
  ExploreOptions o;
  o.mode = state.range(0) ? BeaconMode::BoundaryAndExterior : BeaconMode::BoundaryOnly;
  std::size_t nodes = 0;
  for (auto _ : state) nodes = explore_bfs(ce.polygon, ce.ball, ce.beacon, o).nodes.size();
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ExploreCounterexample)->Arg(0)->Arg(1)->Unit(benchmark::kSecond)->Iterations(1);

void BM_ExploreRandom(benchmark::State& state) {
  const Instance inst = random_orthogonal_instance(state.range(0), 5);
  std::size_t nodes = 0;
  for (auto _ : state) nodes = explore_bfs(inst.polygon, inst.ball, inst.beacon).nodes.size();
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ExploreRandom)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_LabelRegions(benchmark::State& state) {
  const Instance ce = builtin_counterexample();
  const ConfigGraph g = explore_bfs(ce.polygon, ce.ball, ce.beacon);
  for (auto _ : state) benchmark::DoNotOptimize(label_regions(ce.polygon, g));
}
BENCHMARK(BM_LabelRegions)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
