#include <benchmark/benchmark.h>

#include "bcnid/analysis.hpp"
#include "bcnid/harness.hpp"

using namespace bcnid;

void BM_FindO3Test(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Bcn sys = random_plant(n, 1, 1, PlantProperty::Any, 11);
  for (auto _ : state) benchmark::DoNotOptimize(find_o3_test(sys, sys.state_count()));
}
BENCHMARK(BM_FindO3Test)->DenseRange(2, 5, 1);

void BM_BuildO1Test(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Bcn sys = random_plant(n, 2, 1, PlantProperty::Any, 12);
  for (auto _ : state) benchmark::DoNotOptimize(build_o1_test(sys));
}
BENCHMARK(BM_BuildO1Test)->DenseRange(3, 7, 1);

void BM_CoverSequence(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Bcn sys = random_plant(n, 2, 1, PlantProperty::Any, 13);
  for (auto _ : state) benchmark::DoNotOptimize(build_cover_sequence(sys, 1));
}
BENCHMARK(BM_CoverSequence)->DenseRange(3, 9, 2);
