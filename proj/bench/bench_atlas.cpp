// Serial reference vs OpenMP atlas construction.
//
//   ./build/bench/bench_atlas --benchmark_filter=Atlas

#include <benchmark/benchmark.h>

#include "knotepi/atlas.hpp"

namespace {

using knotepi::AtlasBounds;
using knotepi::KnownRelations;

void BM_AtlasSerial(benchmark::State& state) {
  const AtlasBounds b{state.range(0), state.range(0) * 2};
  const bool riley = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(knotepi::build_atlas_serial(b, KnownRelations{}, {riley, 0}));
}

void BM_AtlasParallel(benchmark::State& state) {
  const AtlasBounds b{state.range(0), state.range(0) * 2};
  const bool riley = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(knotepi::build_atlas(b, KnownRelations{}, {riley, 0}));
}

void BM_RileyPolynomial(benchmark::State& state) {
  const auto k = knotepi::tb_normalize(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(knotepi::riley_polynomial(k));
}

}  // namespace

BENCHMARK(BM_AtlasSerial)->Args({45, 0})->Args({99, 0})->Args({45, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AtlasParallel)->Args({45, 0})->Args({99, 0})->Args({45, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RileyPolynomial)->Args({59, 21})->Args({175, 81})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
