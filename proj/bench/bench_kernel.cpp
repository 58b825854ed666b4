#include <benchmark/benchmark.h>

#include "symlen/text.hpp"
#include "symlen/zero_finder.hpp"

using namespace symlen;

namespace {

// (t,2)_2 is not split over F_5(t), so every scan runs to the end of its range
const CompiledSystem& system_without_zeros() {
  static const CompiledSystem sys = [] {
    const Backend r(FiniteField::get_order(5), true);
    return compile_norm_system(build_chain(parse_product(r, "(t,2)_2")), 2);
  }();
  return sys;
}

void BM_ScanSerial(benchmark::State& state) {
  const auto mode = static_cast<Enumeration>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_serial(system_without_zeros(), mode, 1, 1, static_cast<std::uint64_t>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ScanParallel(benchmark::State& state) {
  const auto mode = static_cast<Enumeration>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        search_parallel(system_without_zeros(), mode, 1, 1, static_cast<std::uint64_t>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SplitSerial(benchmark::State& state) {
  const auto& sys = system_without_zeros();
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_split(sys, 3, 1u << 12, Enumeration::Hashed, 1, 0, 1u << 16, false));
  }
}

void BM_SplitParallel(benchmark::State& state) {
  const auto& sys = system_without_zeros();
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_split(sys, 3, 1u << 12, Enumeration::Hashed, 1, 0, 1u << 16, true));
  }
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Args({1 << 16, 0})->Args({1 << 16, 1})->Args({1 << 20, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Args({1 << 16, 0})->Args({1 << 16, 1})->Args({1 << 20, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SplitSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SplitParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
