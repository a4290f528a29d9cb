// Serial reference vs OpenMP kernels: exhaustive feasibility search and
// per-round site accounting in the simulator.

#include "shallowcast/simulator.hpp"
#include "shallowcast/verifier.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace shallowcast;

// Four sites, every stream at 6 units: several hundred first-row splits to fan out.
NetworkSpec search_instance() { return make_spec({18, 18, 18, 18}, {6, 6, 6, 6}); }

// Site 0 has no residual uplink, so every split relaying through it is pruned late.
NetworkSpec skewed_instance() { return make_spec({6, 30, 18, 18}, {6, 6, 6, 6}); }

TransmissionPlan sim_plan(std::size_t n) {
  std::vector<Rate> uplink(n), rates(n);
  for (std::size_t i = 0; i < n; ++i) {
    rates[i] = Rate(i % 5 + 1, i % 3 + 1);
    uplink[i] = rates[i] * (n - 1) + Rate(1, 7);
  }
  return plan(make_spec(std::move(uplink), std::move(rates)));
}

void BM_BruteForceSerial(benchmark::State& state) {
  const auto spec = state.range(0) ? search_instance() : skewed_instance();
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_feasibility_serial(spec, 1));
}
BENCHMARK(BM_BruteForceSerial)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_BruteForceParallel(benchmark::State& state) {
  const auto spec = state.range(0) ? search_instance() : skewed_instance();
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_feasibility(spec, 1));
}
BENCHMARK(BM_BruteForceParallel)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_SimulateSerial(benchmark::State& state) {
  const auto p = sim_plan(static_cast<std::size_t>(state.range(0)));
  SimConfig config;
  config.rounds = 5;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_serial(p, config));
}
BENCHMARK(BM_SimulateSerial)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_SimulateParallel(benchmark::State& state) {
  const auto p = sim_plan(static_cast<std::size_t>(state.range(0)));
  SimConfig config;
  config.rounds = 5;
  for (auto _ : state) benchmark::DoNotOptimize(simulate(p, config));
}
BENCHMARK(BM_SimulateParallel)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
