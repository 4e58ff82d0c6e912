#pragma once

// Small, deliberately naive reference implementations used as oracles by the
// tests. None of them share code with the library beyond the data types.

#include <cstdint>
#include <vector>

#include "dspc/graph.hpp"

namespace dspc::ref {

// Every directed s->t path as a vertex list (s == t gives [s]).
std::vector<std::vector<VertexId>> all_paths(const Dag& dag, VertexId s, VertexId t);

// Sum of edge weights along a vertex list; -1 if some hop is missing.
Weight walk_weight(const Dag& dag, const std::vector<VertexId>& walk);

// Minimum over all_paths, or -1 when t is unreachable.
Weight naive_dist(const Dag& dag, VertexId s, VertexId t);

bool dfs_reachable(const Dag& dag, VertexId s, VertexId t);

// Exhaustive feasibility over all combinations of shortest paths, honoring
// the instance's congestion and mode.
bool naive_feasible(const Instance& inst);

// Occurrence counts per vertex (slot 0 unused) or per edge index.
std::vector<int> recount_profile(const Dag& dag, const Solution& sol, CongestionMode mode);

// Vertices whose recount equals c.
std::vector<VertexId> recount_hot(const Instance& inst, const Solution& sol);

// Number of ways to pick one candidate per row with pairwise-distinct tails
// and heads.
std::int64_t count_injective_assignments(const Dag& dag,
                                         const std::vector<std::vector<EdgeIndex>>& candidates);

// Layered construction with a known feasible solution: layers of one shared
// vertex plus one private vertex per demand, complete links between layers,
// one weight per layer gap. Exactly c paths use the shared vertex of every
// layer, so every shared vertex is at congestion c and nothing else is.
struct LayeredSolution {
  Instance instance;
  Solution solution;
  std::vector<VertexId> shared;  // in layer order
};

LayeredSolution build_layered_solution(int k, int c, int layers, std::uint64_t seed);

// Picks (k, c) with k > 3(k - c) and a layer count from the seed.
LayeredSolution random_layered_solution(std::uint64_t seed);

}  // namespace dspc::ref

#include "dspc/kernelizer.hpp"

namespace dspc::ref {

// Every (carrier, donor, pivot) with the carrier missing the pivot, the
// carrier's nearest hot vertices on both sides of it forming the window, and
// the donor passing through window ends and pivot.
std::vector<SwapContext> valid_swap_contexts(const Instance& inst, const Solution& sol);

}  // namespace dspc::ref
