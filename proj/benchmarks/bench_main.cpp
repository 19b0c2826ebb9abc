#include <benchmark/benchmark.h>

#include "ramsey/bounds.hpp"
#include "ramsey/decomposition.hpp"
#include "ramsey/embed.hpp"
#include "ramsey/lemmas.hpp"
#include "ramsey/named_graphs.hpp"
#include "ramsey/oracle.hpp"

using namespace ramsey;

static void BM_BasePair(benchmark::State& state) {
  const TwoColoring c = random_coloring(static_cast<int>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(find_base_pair(c, {3, 3}));
}
BENCHMARK(BM_BasePair)->Arg(64)->Arg(256)->Arg(1024);

static void BM_GreedyEmbedK4(benchmark::State& state) {
  const TwoColoring c = random_coloring(static_cast<int>(state.range(0)), 0.5, 2);
  const Graph k4 = complete_graph(4);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_embed(c, k4, Color::Blue));
}
BENCHMARK(BM_GreedyEmbedK4)->Arg(16)->Arg(64)->Arg(256);

static void BM_ArrowsK3K3(benchmark::State& state) {
  OracleOptions o;
  o.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(arrows(static_cast<int>(state.range(0)), complete_graph(3), complete_graph(3), o));
}
BENCHMARK(BM_ArrowsK3K3)->Args({5, 1})->Args({6, 1})->Args({6, 4});

static void BM_ExactC4C4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exact_ramsey(cycle_graph(4), cycle_graph(4), 7));
}
BENCHMARK(BM_ExactC4C4)->Unit(benchmark::kMillisecond);

static void BM_AlphaSequence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(alpha_sequence(state.range(0), 256));
}
BENCHMARK(BM_AlphaSequence)->Arg(3600)->Arg(1000000000);

static void BM_VerifyMainArithmetic(benchmark::State& state) {
  const long m = state.range(0);
  const mpz_class n = max_admissible_order(m);
  for (auto _ : state) benchmark::DoNotOptimize(verify_main_arithmetic(m, n));
}
BENCHMARK(BM_VerifyMainArithmetic)->Arg(3600)->Arg(1000000)->Unit(benchmark::kMicrosecond);

static void BM_Peel(benchmark::State& state) {
  const Graph g = random_coloring(static_cast<int>(state.range(0)), 0.1, 3).graph(Color::Blue);
  for (auto _ : state) benchmark::DoNotOptimize(peel_high_degree(g, state.range(0) / 4));
}
BENCHMARK(BM_Peel)->Arg(60)->Arg(500);

static void BM_ExtractK6(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const TwoColoring c = random_coloring(6, 0.5, seed++);
    benchmark::DoNotOptimize(extract_ramsey_witness(c, complete_graph(3), complete_graph(3), 3));
  }
}
BENCHMARK(BM_ExtractK6);

BENCHMARK_MAIN();
