#include <benchmark/benchmark.h>

#include "valence/logic.hpp"
#include "valence/uprod.hpp"

using namespace valence;
using namespace valence::logic;

static void BM_VfAxioms(benchmark::State& state) {
  auto m = trivial_valued_field(FqField::get(5));
  Theory t = vf_axioms();
  for (auto _ : state) benchmark::DoNotOptimize(models_theory(m, t));
}
BENCHMARK(BM_VfAxioms);

static void BM_Ultraproduct(benchmark::State& state) {
  std::vector<FiniteStructure> fields{field_structure(FqField::get(2)),
                                      field_structure(FqField::get(3)),
                                      field_structure(FqField::get(5))};
  auto u = principal_filter(3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ultraproduct(fields, u));
}
BENCHMARK(BM_Ultraproduct);

static void BM_C2dSentence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(c2d_sentence(2));
}
BENCHMARK(BM_C2dSentence);
