#include <benchmark/benchmark.h>

#include <random>

#include "bcnid/stp.hpp"

using namespace bcnid;

namespace {

LogicalMatrix random_logical(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<Index> d(1, rows);
  std::vector<Index> idx(cols);
  for (auto& i : idx) i = d(rng);
  return LogicalMatrix(rows, std::move(idx));
}

}  // namespace

// Structure matrix of a network with n states times a state vector.
void BM_LogicalStp(benchmark::State& state) {
  const std::size_t size = std::size_t{1} << state.range(0);
  std::mt19937_64 rng(1);
  const auto f = random_logical(rng, size, size * 4);
  const auto x = random_logical(rng, size * 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(stp(f, x));
}
BENCHMARK(BM_LogicalStp)->DenseRange(4, 16, 4);

void BM_DenseStp(benchmark::State& state) {
  const std::size_t size = std::size_t{1} << state.range(0);
  std::mt19937_64 rng(2);
  const auto a = random_logical(rng, size, size).dense();
  const auto b = random_logical(rng, 2 * size, 2).dense();
  for (auto _ : state) benchmark::DoNotOptimize(stp(a, b));
}
BENCHMARK(BM_DenseStp)->DenseRange(2, 6, 2);

void BM_Kron(benchmark::State& state) {
  const std::size_t size = std::size_t{1} << state.range(0);
  std::mt19937_64 rng(3);
  const auto a = random_logical(rng, size, size), b = random_logical(rng, size, size);
  for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(BM_Kron)->DenseRange(2, 8, 2);
