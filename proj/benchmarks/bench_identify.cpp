#include <benchmark/benchmark.h>

#include "bcnid/harness.hpp"
#include "bcnid/ident.hpp"

using namespace bcnid;

// Case 4 data for every initial state, identified with the O1 decoder.
void BM_IdentifyMulti(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Bcn sys = random_plant(n, 1, 2, PlantProperty::ControllableO1, 14);
  Plant plant(sys);
  CaseParams p;
  p.case_tag = CaseTag::Case4;
  const auto log = gen_case(plant, p);
  for (auto _ : state) benchmark::DoNotOptimize(identify_bcn_o1_multi(log.data, *log.test));
  state.counters["members"] = static_cast<double>(log.data.groups.size() * log.data.groups[0].members.size());
}
BENCHMARK(BM_IdentifyMulti)->DenseRange(2, 5, 1);

void BM_IdentifyBn(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Bcn sys = random_plant(n, 0, n, PlantProperty::ObservableBn, 15);
  Plant plant(sys);
  CaseParams p;
  p.case_tag = CaseTag::Case2;
  const auto log = gen_case(plant, p);
  for (auto _ : state) benchmark::DoNotOptimize(identify_bn(log.data));
}
BENCHMARK(BM_IdentifyBn)->DenseRange(3, 8, 1);
