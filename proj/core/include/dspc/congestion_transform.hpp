#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dspc/dsp_exact.hpp"
#include "dspc/graph.hpp"

namespace dspc {

/// Vertex correspondence between an instance and a transformed one.
/// Vertex 0 in `backward` marks gadget vertices that have no original.
struct TransformMap {
  // forward[v] (v = 1..n of the original) lists the ids representing v.
  std::vector<std::vector<VertexId>> forward;
  // backward[x] (x = 1..n' of the transformed graph) is the original id or 0.
  std::vector<VertexId> backward;
  // Per demand: endpoints in the transformed graph.
  std::vector<std::pair<VertexId, VertexId>> terminal_gadget;

  /// Map of `first` followed by `second`.
  static TransformMap compose(const TransformMap& first, const TransformMap& second);
};

/// Adds fresh s'_i -> s_i and t_i -> t'_i edges (weight 1) per demand and
/// re-targets demand i to (s'_i, t'_i). New ids are n+2i-1 and n+2i.
std::pair<Instance, TransformMap> isolate_terminals(const Instance& inst);

/// How copies of adjacent vertices are joined.
enum class CopyWiring {
  // (u^i, v^j) for every i, j. Paths may change copy index at every vertex,
  // so any congestion-c routing can pick distinct copies vertex by vertex.
  kAllPairs,
  // (u^i, v^i) only. Every path stays on one copy index throughout, which
  // loses routings whose paths cannot be split into c vertex-disjoint groups.
  kSameIndex,
};

/// Replaces every non-terminal vertex by min(c, k) copies and wires edges per
/// `wiring`; terminals stay single. The result has congestion 1 and the
/// transformed flag set. Requires isolated terminals: demand endpoints
/// pairwise distinct, sources without in-edges, terminals without out-edges
/// (Error(kInvariantViolation) otherwise).
std::pair<Instance, TransformMap> expand_congestion(const Instance& inst,
                                                   CopyWiring wiring = CopyWiring::kAllPairs);

/// Maps copy ids back to originals, drops gadget vertices, recomputes lengths
/// and re-verifies against `original`. Throws Error(kProjectionInvalid) if the
/// projected solution does not verify.
Solution project_solution(const Solution& sol, const TransformMap& tm, const Instance& original);

/// isolate_terminals -> expand_congestion -> solve_disjoint_shortest ->
/// project_solution.
std::optional<Solution> solve_with_congestion(const Instance& inst, DspOptions options = {});

}  // namespace dspc
