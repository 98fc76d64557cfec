#include <benchmark/benchmark.h>

#include "valence/hensel.hpp"
#include "valence/local.hpp"

using namespace valence;

static void BM_PadicMul(benchmark::State& state) {
  const LocalRing* ring = LocalRing::padic(7);
  auto a = TruncatedLocal::from_rational(ring, 22, 7, 12);
  auto b = TruncatedLocal::from_rational(ring, 5, 13, 12);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PadicMul);

static void BM_SeriesInv(benchmark::State& state) {
  const FqField* f3 = FqField::get(3);
  const LocalRing* ring = LocalRing::series(f3);
  std::vector<FqElem> digits;
  for (int i = 0; i < 12; ++i) digits.push_back(f3->from_int(1 + i % 2));
  auto a = TruncatedLocal::from_digits(ring, 0, digits, 11);
  for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_SeriesInv);

static void BM_HenselLift(benchmark::State& state) {
  const LocalRing* ring = LocalRing::padic(7);
  auto mk = [&](std::vector<std::int64_t> c) {
    std::vector<TruncatedLocal> v;
    for (auto x : c) v.push_back(TruncatedLocal::from_int(ring, x, 10));
    return UniPoly<TruncatedLocal>(std::move(v));
  };
  auto f = mk({-2, 0, 1});
  auto g0 = mk({-3, 1});
  auto h0 = mk({3, 1});
  for (auto _ : state) benchmark::DoNotOptimize(hensel_lift(f, g0, h0, 8));
}
BENCHMARK(BM_HenselLift);
