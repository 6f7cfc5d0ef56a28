#include <benchmark/benchmark.h>

#include "symprime/scan.hpp"
#include "symprime/sieve.hpp"

using namespace symprime;

namespace {

void BM_sieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(primes_up_to(limit));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(limit));
}
BENCHMARK(BM_sieve)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 24);

void run_scan_bench(benchmark::State& state, CheckKind check) {
  const auto to = static_cast<std::uint64_t>(state.range(0));
  const auto workers = static_cast<unsigned>(state.range(1));
  std::uint64_t verdicts = 0;
  for (auto _ : state) {
    ScanOptions opts;
    opts.from = 2;
    opts.to = to;
    opts.checks = {check};
    opts.workers = workers;
    opts.emit = [&](const Verdict&, bool) { ++verdicts; };
    benchmark::DoNotOptimize(scan_range(opts));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(verdicts));
}

void BM_scan_wilson(benchmark::State& state) {
  run_scan_bench(state, CheckKind::Wilson);
}
BENCHMARK(BM_scan_wilson)
    ->Args({20000, 1})
    ->Args({20000, 4})
    ->Args({100000, 4})
    ->UseRealTime();

void BM_scan_wolstenholme3(benchmark::State& state) {
  run_scan_bench(state, CheckKind::Wolstenholme3);
}
BENCHMARK(BM_scan_wolstenholme3)
    ->Args({20000, 1})
    ->Args({20000, 4})
    ->UseRealTime();

void BM_scan_wolstenholme4(benchmark::State& state) {
  run_scan_bench(state, CheckKind::Wolstenholme4);
}
BENCHMARK(BM_scan_wolstenholme4)
    ->Args({20000, 1})
    ->Args({20000, 4})
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
