#include <benchmark/benchmark.h>

#include <cstdint>

#include "commdetect/commdetect.hpp"

namespace {

using namespace commdetect;

// range(0) == 0 selects karate, otherwise G(n, 8/n) with that n.
Graph input(const benchmark::State& state) {
  if (state.range(0) == 0) return karate_club();
  const auto n = static_cast<std::size_t>(state.range(0));
  return random_graph(n, 8.0 / static_cast<double>(n), 42);
}

void BM_Louvain(benchmark::State& state, LouvainVariant variant) {
  const Graph g = input(state);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(louvain(g, variant, seed++));
}
BENCHMARK_CAPTURE(BM_Louvain, normal, LouvainVariant::Normal)->Arg(0)->Arg(500)->Arg(5000);
BENCHMARK_CAPTURE(BM_Louvain, total, LouvainVariant::Total)->Arg(0)->Arg(500);
BENCHMARK_CAPTURE(BM_Louvain, noMerge, LouvainVariant::NoMerge)->Arg(0)->Arg(500)->Arg(5000);
BENCHMARK_CAPTURE(BM_Louvain, totalNoMerge, LouvainVariant::TotalNoMerge)->Arg(0)->Arg(500);
BENCHMARK_CAPTURE(BM_Louvain, Exp, LouvainVariant::Exp)->Arg(0)->Arg(500)->Arg(5000);

void BM_FastGreedy(benchmark::State& state) {
  const Graph g = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(fastgreedy(g));
}
BENCHMARK(BM_FastGreedy)->Arg(0)->Arg(500)->Arg(5000);

void BM_EdgeBetweenness(benchmark::State& state) {
  const Graph g = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(edge_betweenness(g));
}
BENCHMARK(BM_EdgeBetweenness)->Arg(0)->Arg(500);

void BM_GirvanNewman(benchmark::State& state) {
  const Graph g = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(girvan_newman(g, 8));
}
BENCHMARK(BM_GirvanNewman)->Arg(0)->Arg(200);

void BM_GirvanNewmanStatic(benchmark::State& state) {
  const Graph g = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(girvan_newman_static(g, 8));
}
BENCHMARK(BM_GirvanNewmanStatic)->Arg(0)->Arg(200);

void BM_Agglomerate(benchmark::State& state, LinkageKind kind) {
  const Graph g = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(agglomerate(g, kind, true));
}
BENCHMARK_CAPTURE(BM_Agglomerate, single, LinkageKind::single)->Arg(0)->Arg(200);
BENCHMARK_CAPTURE(BM_Agglomerate, complete, LinkageKind::complete)->Arg(0)->Arg(200);
BENCHMARK_CAPTURE(BM_Agglomerate, average, LinkageKind::average)->Arg(0)->Arg(200);

void BM_Modularity(benchmark::State& state) {
  const Graph g = input(state);
  const Partition p = louvain(g, LouvainVariant::Normal, 1).partition;
  for (auto _ : state) benchmark::DoNotOptimize(modularity(g, p));
}
BENCHMARK(BM_Modularity)->Arg(0)->Arg(5000);

}  // namespace

BENCHMARK_MAIN();
