#include <benchmark/benchmark.h>

#include "bcnid/dynamics.hpp"
#include "bcnid/harness.hpp"

using namespace bcnid;

void BM_EquivalentRelabeled(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Bcn sys = random_plant(n, 1, 2, PlantProperty::Any, 7);
  const Bcn moved = transform(sys, random_permutation(sys.state_count(), 8));
  for (auto _ : state) benchmark::DoNotOptimize(equivalent(sys, moved));
}
BENCHMARK(BM_EquivalentRelabeled)->DenseRange(3, 10, 1);

void BM_Transform(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Bcn sys = random_plant(n, 2, 2, PlantProperty::Any, 9);
  const PermutationMap g = random_permutation(sys.state_count(), 10);
  for (auto _ : state) benchmark::DoNotOptimize(transform(sys, g));
}
BENCHMARK(BM_Transform)->DenseRange(4, 12, 4);
