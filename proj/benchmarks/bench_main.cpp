#include <benchmark/benchmark.h>

#include "tokenham/fan_ham.hpp"
#include "tokenham/graycode.hpp"
#include "tokenham/token.hpp"
#include "tokenham/verification.hpp"

using namespace tokenham;

static void BM_RankUnrank(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const std::size_t k = n / 2;
  const std::uint64_t total = binomial(n, k);
  std::uint64_t r = 0;
  for (auto _ : state) {
    const TokenVertex v = unrank(r, n, k);
    benchmark::DoNotOptimize(rank(v, n));
    r = (r + 7919) % total;
  }
}
BENCHMARK(BM_RankUnrank)->Arg(16)->Arg(32)->Arg(60);

static void BM_TokenGraph(benchmark::State& state) {
  const Graph g = build(GraphFamily::fan(3, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(token_graph(g, 3).size());
}
BENCHMARK(BM_TokenGraph)->Arg(8)->Arg(16)->Arg(24);

static void BM_FanCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fan_cycle(2, n, k).sequence.size());
  state.SetLabel("C=" + std::to_string(binomial(static_cast<std::size_t>(n + 2), static_cast<std::size_t>(k))));
}
BENCHMARK(BM_FanCycle)->Args({8, 2})->Args({10, 3})->Args({14, 4})->Unit(benchmark::kMillisecond);

static void BM_VerifyCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = build(GraphFamily::fan(2, static_cast<std::size_t>(n)));
  const CycleCertificate cert = fan_cycle(2, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_cycle(g, 3, cert).accepted());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cert.sequence.size()));
}
BENCHMARK(BM_VerifyCycle)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_BruteCycle(benchmark::State& state) {
  const Graph t = token_graph(build(GraphFamily::fan(2, static_cast<int>(state.range(0)))), 3).graph();
  for (auto _ : state) benchmark::DoNotOptimize(brute_ham_cycle(t).status);
}
BENCHMARK(BM_BruteCycle)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_BruteRefute(benchmark::State& state) {
  const Graph t = token_graph(build(GraphFamily::cycle(static_cast<int>(state.range(0)))), 2).graph();
  for (auto _ : state) benchmark::DoNotOptimize(brute_ham_cycle(t).status);
}
BENCHMARK(BM_BruteRefute)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_GrayCodeSearch(benchmark::State& state) {
  const auto rel = ClosenessRelation::transposition(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(search_gray_code(rel, 3, true).status);
}
BENCHMARK(BM_GrayCodeSearch)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
