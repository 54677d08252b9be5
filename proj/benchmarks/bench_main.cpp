#include <benchmark/benchmark.h>

#include <random>

#include "catmat/construct.hpp"
#include "catmat/decide.hpp"
#include "catmat/oracle.hpp"
#include "catmat/witness_io.hpp"

using namespace catmat;

namespace {
  // n x n one-unit matrix with room for extras everywhere.
  PosMatrix one_unit_matrix(std::size_t n, Entry scale) {
    PosMatrix m(n, scale * scale + 1);
    for (std::size_t i = 1; i < n; ++i) {
      m.set(0, i, scale);
      m.set(i, 0, scale);
      m.set(i, i, scale * scale + 2);
    }
    m.set(0, 0, 1);
    return m;
  }

  PosMatrix random_matrix(std::size_t n, unsigned seed) {
    std::mt19937                    rng(seed);
    std::uniform_int_distribution<> d(1, 4);
    PosMatrix                       m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, d(rng));
    return m;
  }
}  // namespace

static void BM_decide(benchmark::State& state) {
  auto m = random_matrix(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(decide(m));
}
BENCHMARK(BM_decide)->Arg(3)->Arg(8)->Arg(32);

static void BM_reduce(benchmark::State& state) {
  PosMatrix m(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(m));
}
BENCHMARK(BM_reduce)->Arg(8)->Arg(64);

static void BM_check_by_submatrices(benchmark::State& state) {
  auto m = random_matrix(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_by_submatrices(m));
}
BENCHMARK(BM_check_by_submatrices)->Arg(6)->Arg(12);

static void BM_construct_one_unit(benchmark::State& state) {
  auto m = one_unit_matrix(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(construct_one_unit(m));
}
BENCHMARK(BM_construct_one_unit)->Arg(3)->Arg(6);

static void BM_construct_leinster(benchmark::State& state) {
  PosMatrix m(state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(construct_leinster(m));
}
BENCHMARK(BM_construct_leinster)->Arg(3)->Arg(6);

static void BM_verify(benchmark::State& state) {
  auto m = one_unit_matrix(state.range(0), 2);
  auto c = construct_one_unit(m);
  for (auto _ : state) benchmark::DoNotOptimize(verify(c, m));
  state.counters["morphisms"] = static_cast<double>(c.morphism_count());
}
BENCHMARK(BM_verify)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_witness_round_trip(benchmark::State& state) {
  auto c = construct_one_unit(one_unit_matrix(state.range(0), 2));
  for (auto _ : state) benchmark::DoNotOptimize(parse_witness(to_witness_string(c)));
}
BENCHMARK(BM_witness_round_trip)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_search_exhausted(benchmark::State& state) {
  PosMatrix m{{1, 1, 1}, {3, 3, 1}, {2, 1, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(search(m));
}
BENCHMARK(BM_search_exhausted)->Unit(benchmark::kMillisecond);

static void BM_search_found(benchmark::State& state) {
  PosMatrix m{{1, 2}, {2, 5}};
  for (auto _ : state) benchmark::DoNotOptimize(search(m));
}
BENCHMARK(BM_search_found)->Unit(benchmark::kMillisecond);

// A larger instance cut off by the budget: raw node throughput.
static void BM_search_budget(benchmark::State& state) {
  PosMatrix    m{{1, 2, 2}, {2, 5, 4}, {2, 4, 5}};
  SearchConfig cfg{.node_budget = 100'000};
  for (auto _ : state) benchmark::DoNotOptimize(search(m, cfg));
  state.counters["nodes/s"] =
      benchmark::Counter(100'000.0 * state.iterations(), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_search_budget)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
