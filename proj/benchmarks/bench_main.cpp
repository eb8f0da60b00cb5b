#include <benchmark/benchmark.h>

#include "sqs/constructs.hpp"
#include "sqs/groups.hpp"
#include "sqs/kmsearch.hpp"
#include "sqs/screen.hpp"

static void BM_AGL52Order(benchmark::State& state) {
  for (auto _ : state) {
    auto g = sqs::agl(5, 2);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_AGL52Order)->Unit(benchmark::kMillisecond);

static void BM_OrbitsOn4Subsets(benchmark::State& state) {
  auto g = sqs::a_gamma_l1(32);
  for (auto _ : state) benchmark::DoNotOptimize(g.orbits_on_ksubsets(4).orbits.size());
}
BENCHMARK(BM_OrbitsOn4Subsets)->Unit(benchmark::kMillisecond);

static void BM_VerifySqs(benchmark::State& state) {
  auto d = sqs::boolean_sqs(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sqs::verify_sqs(d).ok);
}
BENCHMARK(BM_VerifySqs)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMicrosecond);

static void BM_FlagTransitive(benchmark::State& state) {
  auto d = sqs::netto_sqs(31);
  auto g = sqs::psl2(31);
  for (auto _ : state) benchmark::DoNotOptimize(sqs::is_flag_transitive(d, g));
}
BENCHMARK(BM_FlagTransitive)->Unit(benchmark::kMicrosecond);

static void BM_KmSearchPsl13(benchmark::State& state) {
  auto g = sqs::psl2(13);
  for (auto _ : state) benchmark::DoNotOptimize(sqs::find_flag_transitive_sqs(g).size());
}
BENCHMARK(BM_KmSearchPsl13)->Unit(benchmark::kMillisecond);

static void BM_Screen(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sqs::run_screen(10, 128).cases.size());
}
BENCHMARK(BM_Screen)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
