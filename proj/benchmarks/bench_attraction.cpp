#include <benchmark/benchmark.h>

#include "beacon/attraction.hpp"
#include "beacon/geodesic.hpp"
#include "beacon/library.hpp"
#include "beacon/perturb.hpp"

namespace {

using namespace beacon;

void BM_AttractRandomOrthogonal(benchmark::State& state) {
  const Instance inst = random_orthogonal_instance(state.range(0), 3);
  const auto& vs = inst.polygon.vertices();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(attract(inst.polygon, inst.ball, vs[i++ % vs.size()]));
  }
  state.counters["vertices"] = static_cast<double>(vs.size());
}
BENCHMARK(BM_AttractRandomOrthogonal)->Arg(6)->Arg(12)->Arg(24);

void BM_AttractCounterexample(benchmark::State& state) {
  const Instance ce = builtin_counterexample();
  for (auto _ : state) benchmark::DoNotOptimize(attract(ce.polygon, ce.ball, ce.beacon));
}
BENCHMARK(BM_AttractCounterexample);

void BM_Geodesic(benchmark::State& state) {
  const Instance ce = builtin_counterexample();
  for (auto _ : state) benchmark::DoNotOptimize(geodesic(ce.polygon, ce.ball, ce.beacon));
}
BENCHMARK(BM_Geodesic)->Unit(benchmark::kMillisecond);

}  // namespace
