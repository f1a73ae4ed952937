// Serial references against the OpenMP kernels. Set TOLSYS_THREADS to vary
// the worker count of the parallel variants.

#include <benchmark/benchmark.h>

#include "tolsys/generators.hpp"
#include "tolsys/linalg.hpp"
#include "tolsys/parallel.hpp"
#include "tolsys/relation.hpp"
#include "tolsys/sweep.hpp"

using namespace tolsys;

namespace {

Relation sample(std::size_t n, double density) {
  Rng rng(derive_seed(7, n));
  return random_connected_relation(n, density, rng);
}

void BM_ComposeSerial(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Relation a = sample(n, 0.02);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose_serial(a.adj(), a.adj()));
  }
}

void BM_ComposeParallel(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Relation a = sample(n, 0.02);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(a.adj(), a.adj()));
  }
}

void BM_DiameterSerial(benchmark::State &state) {
  const Relation a = sample(static_cast<std::size_t>(state.range(0)), 0.002);
  for (auto _ : state) {
    benchmark::DoNotOptimize(diameter_bfs_serial(a));
  }
}

void BM_DiameterParallel(benchmark::State &state) {
  const Relation a = sample(static_cast<std::size_t>(state.range(0)), 0.002);
  for (auto _ : state) {
    benchmark::DoNotOptimize(diameter_bfs(a));
  }
}

// A band sweep row by row, then through the parallel evaluator.
void BM_SweepSerial(benchmark::State &state) {
  const auto p = state.range(0);
  for (auto _ : state) {
    std::vector<sweep::Row> rows;
    for (std::int64_t n = 1; n <= 12; ++n) {
      const auto grid = sweep::parse_grid(
          sweep::Family::band, "p=" + std::to_string(p) + ";N=" + std::to_string(n));
      for (auto &row : sweep::evaluate(grid)) {
        rows.push_back(row);
      }
    }
    benchmark::DoNotOptimize(rows);
  }
}

void BM_SweepParallel(benchmark::State &state) {
  const auto grid = sweep::parse_grid(sweep::Family::band,
                                      "p=" + std::to_string(state.range(0)) + ";N=1..12");
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep::evaluate(grid));
  }
}

} // namespace

BENCHMARK(BM_ComposeSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_ComposeParallel)->Arg(256)->Arg(1024);
BENCHMARK(BM_DiameterSerial)->Arg(512)->Arg(2048);
BENCHMARK(BM_DiameterParallel)->Arg(512)->Arg(2048);
BENCHMARK(BM_SweepSerial)->Arg(200);
BENCHMARK(BM_SweepParallel)->Arg(200);

BENCHMARK_MAIN();
