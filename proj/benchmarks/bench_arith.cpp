#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "symprime/arith.hpp"
#include "symprime/modmath.hpp"
#include "symprime/sympoly.hpp"
#include "symprime/theorems.hpp"

using namespace symprime;

namespace {

void BM_mul_mod(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const std::uint64_t m = 80478114820849201ull;  // 16843^4
  std::vector<std::uint64_t> xs(1024);
  for (auto& x : xs) x = rng() % m;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul_mod(xs[i & 1023], xs[(i + 1) & 1023], m));
    ++i;
  }
}
BENCHMARK(BM_mul_mod);

void BM_inv_mod(benchmark::State& state) {
  const std::uint64_t m = 80478114820849201ull;
  std::uint64_t a = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(inv_mod(a, m));
    a = a % (m - 3) + 2;
  }
}
BENCHMARK(BM_inv_mod);

void BM_factorial_mod(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const std::uint64_t m = p * p;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorial_mod(p - 1, m));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p));
}
BENCHMARK(BM_factorial_mod)->Arg(9973)->Arg(99991);

void BM_central_binom_mod(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto power = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(central_binom_mod(p, power));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p));
}
BENCHMARK(BM_central_binom_mod)
    ->Args({9973, 3})
    ->Args({9973, 4})
    ->Args({99991, 4});

void BM_build_table_exact(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_table(n));
  }
}
BENCHMARK(BM_build_table_exact)->Arg(64)->Arg(256);

void BM_build_table_mod(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const BigInt m = big_pow(BigInt(99991), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_table(n, m));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(n) * state.range(0) / 2);
}
BENCHMARK(BM_build_table_mod)->Arg(512)->Arg(2048)->Arg(8192);

void BM_divisibility_report(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(divisibility_report(p));
  }
}
BENCHMARK(BM_divisibility_report)->Arg(499)->Arg(1999);

}  // namespace
