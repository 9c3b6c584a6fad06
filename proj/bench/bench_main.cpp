// Serial vs OpenMP: the product kernel and the first-row search.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "propus/kernels.hpp"
#include "propus/search.hpp"

namespace {

std::vector<std::int8_t> random_pm1(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::int8_t> v(n * n);
  for (auto& x : v) x = (rng() & 1) ? 1 : -1;
  return v;
}

template <bool Parallel>
void BM_ProductTranspose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_pm1(n, 1);
  const auto b = random_pm1(n, 2);
  std::vector<std::int32_t> out(n * n);
  for (auto _ : state) {
    if constexpr (Parallel)
      propus::kernels::product_transpose_parallel(a, b, n, out);
    else
      propus::kernels::product_transpose_serial(a, b, n, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n * n));
}

void BM_Search(benchmark::State& state) {
  propus::SearchSpec spec;
  spec.kind = static_cast<propus::SearchKind>(state.range(0));
  spec.n = static_cast<std::size_t>(state.range(1));
  spec.threads = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(propus::search(spec).hits.size());
}

}  // namespace

BENCHMARK(BM_ProductTranspose<false>)->Name("product_transpose/serial")->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_ProductTranspose<true>)->Name("product_transpose/openmp")->Arg(64)->Arg(256)->Arg(512)->UseRealTime();

// {kind, n, threads}; threads 0 is the OpenMP default.
BENCHMARK(BM_Search)
    ->Name("search")
    ->Args({static_cast<int>(propus::SearchKind::turyn), 41, 1})
    ->Args({static_cast<int>(propus::SearchKind::turyn), 41, 0})
    ->Args({static_cast<int>(propus::SearchKind::doptimal), 19, 1})
    ->Args({static_cast<int>(propus::SearchKind::doptimal), 19, 0})
    ->Args({static_cast<int>(propus::SearchKind::propus), 13, 1})
    ->Args({static_cast<int>(propus::SearchKind::propus), 13, 0})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
