#include <benchmark/benchmark.h>

#include "atomfact/extract.hpp"
#include "atomfact/generate.hpp"
#include "atomfact/higman.hpp"
#include "atomfact/pencil_factor.hpp"
#include "atomfact/unifactor.hpp"

using namespace atomfact;

namespace {

GenLimits limits_for(std::int64_t dim) {
  GenLimits l;
  l.max_dim = static_cast<std::size_t>(dim);
  return l;
}

void BM_FactorMatrix(benchmark::State& state) {
  const GenLimits lim = limits_for(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const GeneratedInstance g = generate(seed++, lim);
    state.ResumeTiming();
    benchmark::DoNotOptimize(factor_matrix(g.M));
  }
}
BENCHMARK(BM_FactorMatrix)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_Linearize(benchmark::State& state) {
  const GeneratedInstance g = generate(7, limits_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(linearize(g.M));
}
BENCHMARK(BM_Linearize)->DenseRange(1, 5);

void BM_FactorPencil(benchmark::State& state) {
  const GeneratedInstance g = generate(11, limits_for(state.range(0)));
  const Pencil l = linearize(g.M).L;
  for (auto _ : state) benchmark::DoNotOptimize(factor_pencil(l));
}
BENCHMARK(BM_FactorPencil)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_Det(benchmark::State& state) {
  const GeneratedInstance g = generate(13, limits_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(det(g.M));
}
BENCHMARK(BM_Det)->DenseRange(1, 5);

void BM_FactorRational(benchmark::State& state) {
  // (x^2 + 1)^k * (x^3 - 2) * (x - 3)
  UPoly f = UPoly(std::vector<Rat>{Rat(-2), Rat(0), Rat(0), Rat(1)}) * UPoly(std::vector<Rat>{Rat(-3), Rat(1)});
  for (std::int64_t k = 0; k < state.range(0); ++k) f = f * UPoly(std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
  for (auto _ : state) benchmark::DoNotOptimize(factor_rational(f));
}
BENCHMARK(BM_FactorRational)->DenseRange(0, 4);

}  // namespace

BENCHMARK_MAIN();
