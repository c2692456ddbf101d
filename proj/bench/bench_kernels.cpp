// Parallel kernels against their serial references. Memo caches are cleared
// inside the timed loop so every iteration recomputes.

#include "qschur/suites.hpp"

#include <benchmark/benchmark.h>

using namespace qschur;

static void BM_CrystalGraph(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0)), d = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(crystal_graph(n, d, 1 - n / 2, 1 - n / 2 + 2 * n - 1));
}
static void BM_CrystalGraphSerial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0)), d = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(crystal_graph_serial(n, d, 1 - n / 2, 1 - n / 2 + 2 * n - 1));
}
BENCHMARK(BM_CrystalGraph)->Args({2, 4})->Args({3, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrystalGraphSerial)->Args({2, 4})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_CanonicalT(benchmark::State& st) {
  for (auto _ : st) {
    clear_canonical_caches();
    benchmark::DoNotOptimize(canonical_table_t(2, 2, 0, 3));
  }
}
static void BM_CanonicalTSerial(benchmark::State& st) {
  for (auto _ : st) {
    clear_canonical_caches();
    benchmark::DoNotOptimize(canonical_table_t_serial(2, 2, 0, 3));
  }
}
static void BM_CanonicalS(benchmark::State& st) {
  for (auto _ : st) {
    clear_canonical_caches();
    benchmark::DoNotOptimize(canonical_table_s(2, 2, 2));
  }
}
static void BM_CanonicalSSerial(benchmark::State& st) {
  for (auto _ : st) {
    clear_canonical_caches();
    benchmark::DoNotOptimize(canonical_table_s_serial(2, 2, 2));
  }
}
BENCHMARK(BM_CanonicalT)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CanonicalTSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CanonicalS)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CanonicalSSerial)->Unit(benchmark::kMillisecond);

static void BM_TransferSweep(benchmark::State& st) {
  for (auto _ : st) {
    clear_canonical_caches();
    clear_span_cache();
    benchmark::DoNotOptimize(transfer_sweep(2, 3, 2, PsiReading::matrix_degree));
  }
}
static void BM_TransferSweepSerial(benchmark::State& st) {
  for (auto _ : st) {
    clear_canonical_caches();
    clear_span_cache();
    benchmark::DoNotOptimize(transfer_sweep_serial(2, 3, 2, PsiReading::matrix_degree));
  }
}
BENCHMARK(BM_TransferSweep)->Unit(benchmark::kMillisecond)->Iterations(2);
BENCHMARK(BM_TransferSweepSerial)->Unit(benchmark::kMillisecond)->Iterations(2);

static void BM_RelationsSuite(benchmark::State& st) {
  SuiteConfig c;
  c.n = 3;
  c.rank = 3;
  c.threads = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(relations_suite(c));
}
BENCHMARK(BM_RelationsSuite)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
