#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dspc/dsp_exact.hpp"
#include "dspc/graph.hpp"

namespace dspc {

/// Solves (k, c)-DSP on a Dag. When k > 3d (d = k - c) only 3d-subsets of the
/// demands are routed exactly, at congestion 2d; the remaining demands take
/// their canonical shortest paths. Otherwise the full instance goes to
/// solve_with_congestion.
std::optional<Solution> solve_kdspc(const Instance& inst, DspOptions options = {});

/// Combines a solution for the demands in `core_subset` (indices into
/// inst.demands, ascending, paths in the same order) with canonical shortest
/// paths for all other demands. The result is not verified.
Solution extend_with_shortest(const Instance& inst, const Solution& core_solution,
                              std::span<const int> core_subset);

/// Vertices whose congestion equals inst.congestion, in topological order.
std::vector<VertexId> find_hot_vertices(const Instance& inst, const Solution& sol);

/// Inputs of one subpath exchange between a carrier path and a donor path.
struct SwapContext {
  std::vector<VertexId> hot_vertices;  // topologically ordered
  int carrier_index = -1;
  int donor_index = -1;
  VertexId pivot = 0;
  // Closest hot vertices on the carrier before and after the pivot.
  std::pair<VertexId, VertexId> window{0, 0};
};

/// Exchanges the window subpaths of carrier and donor. Throws
/// Error(kContextInvalid) when the context does not hold against `sol`.
/// Congestion profile, path lengths and the carrier's hot-vertex coverage are
/// checked after the exchange.
Solution swap_subpaths(const Instance& inst, const Solution& sol, const SwapContext& ctx);

struct ConcentrateResult {
  Solution solution;
  int carrier_index = -1;
  int swaps = 0;
};

/// Repeated swaps until one path carries every vertex of congestion c.
/// Throws Error(kNoDonorFound) when no carrier or donor exists, which happens
/// only if k <= 3d or the input is not a feasible solution.
ConcentrateResult concentrate_congestion(const Instance& inst, const Solution& sol);

}  // namespace dspc
