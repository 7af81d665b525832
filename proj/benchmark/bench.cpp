// serial reference vs OpenMP kernels
#include <benchmark/benchmark.h>

#include "gqd/dessin.hpp"
#include "gqd/genus.hpp"

using namespace gqd;

namespace {

ContextPtr quint(int n) {
  return make_context(Signature::parse("(0;+;[2,2,2,4," + std::to_string(4 * n) + "];{-})"), Group::G(n),
                      Mode::RiemannSurface);
}

// ---- enumeration ----

void BM_EnumerateSerial(benchmark::State& st) {
  auto ctx = quint(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_vectors_serial(ctx).size());
}

void BM_EnumerateParallel(benchmark::State& st) {
  auto ctx = quint(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_vectors(ctx, {int(st.range(1)), true}).size());
}

// ---- minimal-genus search ----

void BM_SearchPure(benchmark::State& st) {
  SearchOptions o;
  o.workers = int(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(pure_symmetric_genus(int(st.range(0)), o).value);
}

void BM_SearchCrosscap(benchmark::State& st) {
  SearchOptions o;
  o.workers = int(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(symmetric_crosscap(int(st.range(0)), o).value);
}

// ---- dessin pair classes ----

void BM_PairClasses(benchmark::State& st) {
  auto G = Group::G(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(generator_pair_classes(*G, int(st.range(1))).size());
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->ArgsProduct({{3, 5}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchPure)->ArgsProduct({{4, 6}, {1, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchCrosscap)->ArgsProduct({{4}, {1, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairClasses)->ArgsProduct({{6}, {1, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
