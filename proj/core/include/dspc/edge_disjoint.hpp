#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dspc/dsp_exact.hpp"
#include "dspc/graph.hpp"

namespace dspc {

/// Correspondence between an edge-mode instance G and its line-graph style
/// vertex-mode instance H.
struct EdgeNodeMap {
  std::vector<VertexId> node_of_edge;                      // by G edge index
  std::vector<std::pair<VertexId, VertexId>> endpoint_node;  // by demand: (source, terminal)
  std::vector<EdgeIndex> edge_of_node;                     // by H id; -1 for endpoint nodes
};

/// One H-vertex per G-edge (ids 1..m in edge order) plus a source and a
/// terminal vertex per demand (ids m+2i-1, m+2i). Arcs:
///   source_i -> node(e), weight w(e), for e leaving s_i;
///   node(e1) -> node(e2), weight w(e2), when head(e1) = tail(e2);
///   node(e) -> terminal_i, weight 0, for e entering t_i;
///   source_i -> terminal_i, weight 0, when s_i = t_i.
/// The result is a vertex-mode instance with the same congestion budget.
std::pair<Instance, EdgeNodeMap> edge_split_transform(const Instance& inst);

/// Maps an H solution back to G vertex sequences.
Solution project_edge_solution(const Solution& h_sol, const EdgeNodeMap& map, const Instance& g_inst);

struct EdspOptions {
  DspOptions dsp;
  bool use_kernel = false;  // route H through solve_kdspc instead of solve_with_congestion
};

/// Edge-disjoint (edge congestion c) shortest paths. The result verifies in
/// edge mode; Error(kProjectionInvalid) otherwise.
std::optional<Solution> solve_edsp(const Instance& inst, EdspOptions options = {});

}  // namespace dspc
