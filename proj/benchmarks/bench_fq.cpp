#include <benchmark/benchmark.h>

#include "valence/counting.hpp"
#include "valence/fq.hpp"

using namespace valence;

static void BM_FqMul(benchmark::State& state) {
  const FqField* f = FqField::get(3, 3);
  FqElem a = f->element_at(5), b = f->element_at(17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a = a * b);
  }
}
BENCHMARK(BM_FqMul);

static void BM_PowerSum(benchmark::State& state) {
  const FqField* f = FqField::get(7, 2);
  for (auto _ : state) benchmark::DoNotOptimize(power_sum(*f, 37));
}
BENCHMARK(BM_PowerSum);

static void BM_CountZeros(benchmark::State& state) {
  const FqField* f = FqField::get(5);
  MultiPoly<FqElem> poly(4);
  for (int i = 0; i < 4; ++i) {
    std::vector<int> e(4, 0);
    e[i] = 2;
    poly.add_term(e, f->one());
  }
  for (auto _ : state) benchmark::DoNotOptimize(count_zeros(poly, f));
}
BENCHMARK(BM_CountZeros);

BENCHMARK_MAIN();
