#include <benchmark/benchmark.h>

#include "skolem/cactus.hpp"
#include "skolem/catalog.hpp"
#include "skolem/labeller.hpp"
#include "skolem/search.hpp"

using namespace skolem;

static void BM_EnumerateSkolem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  std::size_t count = 0;
  for (auto _ : state) {
    auto all = enumerate(SeqKind::skolem(), n, 0, workers);
    count = all.size();
    benchmark::DoNotOptimize(all);
  }
  state.counters["sequences"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateSkolem)->Args({8, 1})->Args({9, 1})->Args({9, 4})->Unit(benchmark::kMillisecond);

static void BM_FindFirstSkolem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SeqKind kind = (n % 4 == 0 || n % 4 == 1) ? SeqKind::skolem() : SeqKind::hooked_skolem();
  for (auto _ : state) benchmark::DoNotOptimize(find_first(kind, n));
}
BENCHMARK(BM_FindFirstSkolem)->Arg(24)->Arg(60)->Arg(150)->Unit(benchmark::kMillisecond);

static void BM_FindFirstLangford(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int l = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(find_first(SeqKind::langford(d), l));
}
BENCHMARK(BM_FindFirstLangford)->Args({6, 20})->Args({6, 60})->Args({20, 60})->Unit(benchmark::kMillisecond);

static void BM_VerifyLabelling(benchmark::State& state) {
  const auto w = label_windmill(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_labelling(w.graph));
}
BENCHMARK(BM_VerifyLabelling)->Arg(16)->Arg(100);

static void BM_CatalogVerify(benchmark::State& state) {
  const Catalog& cat = bundled_catalog();
  for (auto _ : state) benchmark::DoNotOptimize(catalog_verify(cat));
}
BENCHMARK(BM_CatalogVerify)->Unit(benchmark::kMicrosecond);

static void BM_LabelType(benchmark::State& state) {
  const char type = static_cast<char>('a' + state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(label_type(type, n));
}
BENCHMARK(BM_LabelType)
    ->Args({0, 12})
    ->Args({1, 40})
    ->Args({7, 5})
    ->Args({10, 15})
    ->Args({10, 30})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
