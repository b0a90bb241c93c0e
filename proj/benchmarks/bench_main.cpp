#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ladder/baselines.hpp"
#include "ladder/generators.hpp"
#include "ladder/line_projection.hpp"
#include "ladder/static_embedder.hpp"

using namespace ladder;

static void BM_BandwidthExactLadder(benchmark::State& state) {
  Graph g = make_ladder(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bandwidth_exact(g));
}
BENCHMARK(BM_BandwidthExactLadder)->DenseRange(2, 6);

static void BM_InversionCost(benchmark::State& state) {
  std::vector<NodeId> a(static_cast<std::size_t>(state.range(0)));
  std::iota(a.begin(), a.end(), 1);
  auto b = a;
  std::shuffle(b.begin(), b.end(), std::mt19937_64(1));
  for (auto _ : state) benchmark::DoNotOptimize(inversion_cost(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_InversionCost)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oNLogN);

static void BM_ComponentEmbedding(benchmark::State& state) {
  auto inst = gen_ladder_component(static_cast<int>(state.range(0)), 0.8, 3);
  for (auto _ : state) benchmark::DoNotOptimize(component_embedding_left_fixed(inst.graph));
}
BENCHMARK(BM_ComponentEmbedding)->RangeMultiplier(2)->Range(8, 128);

static void BM_EngineFullReveal(benchmark::State& state) {
  int levels = static_cast<int>(state.range(0));
  auto inst = gen_ladder_subgraph(levels, 1.0, 1);
  auto seq = gen_request_sequence(inst.graph, SequenceMode::Reveal, 0, 2);
  EngineOptions opts;
  opts.check_invariants = state.range(1) != 0;
  for (auto _ : state) {
    LadderEngine eng(inst.node_count(), opts);
    for (const Edge& e : seq) benchmark::DoNotOptimize(eng.process_request(e.a, e.b));
  }
  state.counters["requests"] = static_cast<double>(seq.size());
}
BENCHMARK(BM_EngineFullReveal)->ArgsProduct({{8, 16, 32, 64}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_CycleAlgorithm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph c = make_cycle(n);
  auto seq = gen_request_sequence(c, SequenceMode::Reveal, 0, 5);
  for (auto _ : state) {
    CycleAlgorithm alg(n);
    for (const Edge& e : seq) benchmark::DoNotOptimize(alg.step(e.a, e.b));
  }
}
BENCHMARK(BM_CycleAlgorithm)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK_MAIN();
