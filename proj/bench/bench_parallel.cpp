// Serial reference loops against the OpenMP kernels. Arg(0) runs
// map_indexed_serial directly; Arg(k > 0) runs map_indexed with k threads.

#include <benchmark/benchmark.h>

#include "specchrom/generators.hpp"
#include "specchrom/harness.hpp"
#include "specchrom/parallel.hpp"
#include "specchrom/rng.hpp"
#include "specchrom/spectrum.hpp"

using namespace specchrom;

namespace {

void thread_args(benchmark::internal::Benchmark* b) {
  b->Arg(0);
  for (int j = 1; j <= available_threads() * 2; j *= 2) b->Arg(j);
  b->Unit(benchmark::kMillisecond);
}

template <class Fn>
auto run(int jobs, std::size_t count, Fn&& fn) {
  return jobs == 0 ? map_indexed_serial(count, fn) : map_indexed(count, jobs, fn);
}

void BM_SpectraOfRandomGraphs(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto out = run(jobs, 64, [](std::size_t t) {
      return spectral_report(gen::gnp(60, 0.5, derive_seed(1, t))).weaker.conjecture;
    });
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_SpectraOfRandomGraphs)->Apply(thread_args);

void BM_ExhaustiveScan(benchmark::State& state) {
  ScanSpec spec;
  spec.kind = ScanSpec::Kind::exhaustive;
  spec.max_n = 6;
  spec.jobs = std::max(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(counterexample_scan(spec).graphs);
}
BENCHMARK(BM_ExhaustiveScan)->Apply(thread_args);

void BM_Sweep(benchmark::State& state) {
  const int jobs = std::max(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(random_sweep(50, 0.5, 15, 7, jobs).mean_conjecture);
}
BENCHMARK(BM_Sweep)->Apply(thread_args);

void BM_Corpus(benchmark::State& state) {
  EvalOptions opt;
  opt.jobs = std::max(1, static_cast<int>(state.range(0)));
  const auto corpus = standard_corpus();
  for (auto _ : state) benchmark::DoNotOptimize(corpus_run(corpus, opt).size());
}
BENCHMARK(BM_Corpus)->Apply(thread_args);

}  // namespace

BENCHMARK_MAIN();
