#include <benchmark/benchmark.h>

#include <numbers>

#include "rbw/mzi.hpp"
#include "rbw/relsim.hpp"

namespace {

constexpr double kK0 = 2.0 * std::numbers::pi;

void BM_SweepSerial(benchmark::State& state) {
  const auto as = rbw::mzi::linspace(0.0, 1.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rbw::mzi::sweep_serial(kK0, as));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(as.size()));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto as = rbw::mzi::linspace(0.0, 1.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rbw::mzi::sweep(kK0, as));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(as.size()));
}

std::vector<rbw::relsim::SpacetimeEvent> grid(std::size_t n) {
  std::vector<rbw::relsim::SpacetimeEvent> events(n);
  for (std::size_t i = 0; i < n; ++i)
    events[i] = {"e" + std::to_string(i), 1e-4 * static_cast<double>(i), 3.0 * static_cast<double>(i), "boys"};
  return events;
}

void BM_BoostSerial(benchmark::State& state) {
  const auto events = grid(static_cast<std::size_t>(state.range(0)));
  const rbw::relsim::Boost b{0.6 * rbw::relsim::kLightSpeed, rbw::relsim::kLightSpeed, "girls"};
  for (auto _ : state) benchmark::DoNotOptimize(rbw::relsim::boost_events_serial(events, b));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BoostParallel(benchmark::State& state) {
  const auto events = grid(static_cast<std::size_t>(state.range(0)));
  const rbw::relsim::Boost b{0.6 * rbw::relsim::kLightSpeed, rbw::relsim::kLightSpeed, "girls"};
  for (auto _ : state) benchmark::DoNotOptimize(rbw::relsim::boost_events(events, b));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(1000)->Arg(100000);
BENCHMARK(BM_SweepParallel)->Arg(1000)->Arg(100000);
BENCHMARK(BM_BoostSerial)->Arg(1000)->Arg(100000);
BENCHMARK(BM_BoostParallel)->Arg(1000)->Arg(100000);

BENCHMARK_MAIN();
