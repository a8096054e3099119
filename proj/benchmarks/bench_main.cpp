#include <benchmark/benchmark.h>

#include <random>

#include "arq/gorenstein.hpp"
#include "arq/morphcat.hpp"
#include "arq/stabfun.hpp"
#include "spec_io.hpp"

using namespace arq;

namespace {

AlgPtr fixture(const std::string& name) {
  return build_algebra(io::load_spec(std::string(ARQ_SOURCE_DIR) + "/fixtures/" + name + ".json"));
}

void BM_Rref(benchmark::State& st) {
  const std::size_t n = st.range(0);
  std::mt19937 rng(1);
  FMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng() % kDefaultPrime;
  for (auto _ : st) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(64)->Arg(128);

void BM_BuildAlgebra(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(fixture("t2dualnumbers"));
}
BENCHMARK(BM_BuildAlgebra);

void BM_IndecomposablesA3(benchmark::State& st) {
  AlgPtr a = fixture("a3");
  for (auto _ : st) benchmark::DoNotOptimize(all_indecomposables(a));
}
BENCHMARK(BM_IndecomposablesA3);

void BM_ARQuiverT2(benchmark::State& st) {
  AlgPtr a = fixture("t2dualnumbers");
  for (auto _ : st) benchmark::DoNotOptimize(ar_quiver(a));
}
BENCHMARK(BM_ARQuiverT2)->Unit(benchmark::kMillisecond);

void BM_GprjIndecomposablesT2(benchmark::State& st) {
  AlgPtr a = fixture("t2dualnumbers");
  for (auto _ : st) benchmark::DoNotOptimize(gprj_indecomposables(a));
}
BENCHMARK(BM_GprjIndecomposablesT2)->Unit(benchmark::kMillisecond);

void BM_StableAuslanderA3(benchmark::State& st) {
  AlgPtr a = fixture("a3");
  for (auto _ : st) benchmark::DoNotOptimize(module_context(a));
}
BENCHMARK(BM_StableAuslanderA3)->Unit(benchmark::kMillisecond);

void BM_SubmoduleQuiverA3(benchmark::State& st) {
  AddXContext x = module_context(fixture("a3"));
  for (auto _ : st) benchmark::DoNotOptimize(assemble_sx_quiver(x, Ambient::Modules));
}
BENCHMARK(BM_SubmoduleQuiverA3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
