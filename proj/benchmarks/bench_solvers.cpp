#include <benchmark/benchmark.h>

#include <vector>

#include "dspc/congestion_transform.hpp"
#include "dspc/distances.hpp"
#include "dspc/dsp_exact.hpp"
#include "dspc/edge_disjoint.hpp"
#include "dspc/hardness_gen.hpp"
#include "dspc/kernelizer.hpp"
#include "dspc/random_instance.hpp"

using namespace dspc;

namespace {

std::vector<Instance> batch(int n, int k, int c, int count) {
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    RandomDagParams p;
    p.vertex_count = n;
    p.demand_count = k;
    p.congestion = c;
    p.edge_percent = 45;
    out.push_back(random_instance(p, static_cast<std::uint64_t>(i + 1)));
  }
  return out;
}

void BM_AllPairsDist(benchmark::State& state) {
  const auto insts = batch(static_cast<int>(state.range(0)), 1, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(DistanceMatrix(insts[0].dag));
}
BENCHMARK(BM_AllPairsDist)->Arg(16)->Arg(64)->Arg(256);

void BM_SolveDisjoint(benchmark::State& state) {
  const auto insts = batch(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1, 32);
  for (auto _ : state) {
    for (const Instance& inst : insts) benchmark::DoNotOptimize(solve_disjoint_shortest(inst.dag, inst.demands));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(insts.size()));
}
BENCHMARK(BM_SolveDisjoint)->Args({8, 3})->Args({16, 3})->Args({16, 4})->Args({32, 3});

void BM_Oracle(benchmark::State& state) {
  const auto insts = batch(static_cast<int>(state.range(0)), 3, 1, 32);
  for (auto _ : state) {
    for (const Instance& inst : insts) benchmark::DoNotOptimize(brute_force_oracle(inst));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(insts.size()));
}
BENCHMARK(BM_Oracle)->Arg(8)->Arg(16);

void BM_SolveWithCongestion(benchmark::State& state) {
  const auto insts = batch(static_cast<int>(state.range(0)), 3, static_cast<int>(state.range(1)), 32);
  for (auto _ : state) {
    for (const Instance& inst : insts) benchmark::DoNotOptimize(solve_with_congestion(inst));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(insts.size()));
}
BENCHMARK(BM_SolveWithCongestion)->Args({6, 2})->Args({12, 2})->Args({12, 3});

void BM_SolveKdspc(benchmark::State& state) {
  const int k = static_cast<int>(state.range(1));
  const auto insts = batch(static_cast<int>(state.range(0)), k, k - 1, 32);
  for (auto _ : state) {
    for (const Instance& inst : insts) benchmark::DoNotOptimize(solve_kdspc(inst));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(insts.size()));
}
BENCHMARK(BM_SolveKdspc)->Args({8, 4})->Args({8, 5})->Args({12, 5});

void BM_MccSolve(benchmark::State& state) {
  std::vector<std::pair<ColoredGraph, MccInstance>> gens;
  for (int seed = 1; seed <= 8; ++seed) {
    const ColoredGraph cg = random_colored_graph({static_cast<int>(state.range(0)), 2, 40, seed % 2 == 0},
                                                 static_cast<std::uint64_t>(seed));
    gens.emplace_back(cg, mcc_to_planar_edsp(cg, 2));
  }
  for (auto _ : state) {
    for (const auto& [cg, gen] : gens) benchmark::DoNotOptimize(solve_edsp(gen.instance));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(gens.size()));
}
BENCHMARK(BM_MccSolve)->Arg(3)->Arg(5)->Arg(7);

void BM_PsiGenerate(benchmark::State& state) {
  const PatternGraph pattern = PatternGraph::cube();
  const HostGraph host = random_host_graph(pattern, {static_cast<int>(state.range(0)), 50, true}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(psi_to_dspc(pattern, host, 2));
}
BENCHMARK(BM_PsiGenerate)->Arg(1)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
