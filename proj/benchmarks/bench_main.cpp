#include <benchmark/benchmark.h>

#include <vector>

#include "cookie/chain.hpp"
#include "cookie/kernel.hpp"
#include "cookie/transition_rows.hpp"
#include "cookie/walk.hpp"

namespace {

const cookie::CookieEnv& env09() {
  static const cookie::CookieEnv env = cookie::validate_environment(3, {0.9, 0.9, 0.9});
  return env;
}

void BM_KernelRow(benchmark::State& state) {
  const auto j = static_cast<std::size_t>(state.range(0));
  const auto cap = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cookie::a_distribution(env09(), j, cap));
}
BENCHMARK(BM_KernelRow)->Args({2, 1024})->Args({500, 1024})->Args({4000, 8192});

void BM_BandedRows(benchmark::State& state) {
  const auto cap = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    cookie::BandedRows rows(env09(), cap);
    benchmark::DoNotOptimize(rows.stored_entries());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BandedRows)->RangeMultiplier(2)->Range(1024, 8192)->Unit(benchmark::kMillisecond)->Complexity();

void BM_StationarySolve(benchmark::State& state) {
  cookie::SolverConfig config;
  config.cap = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cookie::stationary_distribution(env09(), config));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StationarySolve)->RangeMultiplier(2)->Range(1024, 8192)->Unit(benchmark::kMillisecond)->Complexity();

void BM_PushForward(benchmark::State& state) {
  const cookie::BandedRows rows(env09(), 4096);
  std::vector<double> x(4097, 0.0), out(4097, 0.0);
  x[0] = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cookie::push_forward(rows, x, out));
    x.swap(out);
  }
}
BENCHMARK(BM_PushForward)->Unit(benchmark::kMicrosecond);

// Throughput in walk steps per second.
void BM_WalkSteps(benchmark::State& state) {
  const auto level = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 1;
  std::int64_t steps = 0;
  for (auto _ : state) {
    const auto rec = cookie::simulate_to_level(env09(), level, seed++);
    steps += static_cast<std::int64_t>(rec.hitting_time);
  }
  state.SetItemsProcessed(steps);
}
BENCHMARK(BM_WalkSteps)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ChainSteps(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(cookie::simulate_chain(env09(), 10000, seed++));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_ChainSteps)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
