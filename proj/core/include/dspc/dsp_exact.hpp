#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "dspc/distances.hpp"
#include "dspc/graph.hpp"

namespace dspc {

/// Half-open range [lo, hi) of positions in a topological order.
struct Interval {
  std::int32_t lo = 0;
  std::int32_t hi = 0;

  std::int32_t size() const noexcept { return hi - lo; }
  bool contains(std::int32_t pos) const noexcept { return pos >= lo && pos < hi; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Left gets the first ceil(len/2) positions. Requires size() >= 2.
std::pair<Interval, Interval> split_interval(Interval interval);

/// Memo key: an interval plus the demand tuple routed inside it, kept sorted so
/// lookups do not depend on demand order.
struct TupleKey {
  Interval interval;
  std::vector<Demand> pairs;

  static TupleKey canonical(Interval interval, std::vector<Demand> pairs);
  friend auto operator<=>(const TupleKey&, const TupleKey&) = default;
};

/// One boundary edge per crossing demand (same order as the demands).
struct BoundaryEdgeSet {
  std::vector<EdgeIndex> edges;
};

/// Calls `visit` for every assignment of one left->right edge per crossing
/// demand with pairwise-distinct tails and heads, in lexicographic order of
/// (demand index, edge index). Stops early when `visit` returns false.
/// Returns the number of sets visited.
std::int64_t enumerate_boundary_sets(const Dag& dag, Interval left, Interval right,
                                     std::span<const Demand> crossing_demands,
                                     const std::function<bool(const BoundaryEdgeSet&)>& visit);

/// Same enumeration over caller-supplied candidate edges per crossing demand.
std::int64_t enumerate_boundary_sets(const Dag& dag,
                                     std::span<const std::vector<EdgeIndex>> candidates,
                                     const std::function<bool(const BoundaryEdgeSet&)>& visit);

/// Crossing edges of a split, in edge-index order.
std::vector<EdgeIndex> crossing_edges(const Dag& dag, Interval left, Interval right);

/// Assembles left part + boundary edge + right part for every crossing demand
/// and accepts iff each assembled length equals the global shortest distance
/// and the assembled paths are pairwise vertex-disjoint.
///
/// `left_sol.paths[i]` routes crossing_demands[i].source -> tail(bset[i]),
/// `right_sol.paths[i]` routes head(bset[i]) -> crossing_demands[i].terminal.
std::optional<Solution> merge_check(const Dag& dag, const DistanceMatrix& dm,
                                    const Solution& left_sol, const Solution& right_sol,
                                    const BoundaryEdgeSet& bset,
                                    std::span<const Demand> crossing_demands);

/// Entries are written once and never overwritten.
class MemoStore {
 public:
  using Entry = std::optional<Solution>;

  const Entry* find(const TupleKey& key) const;
  const Entry& insert(TupleKey key, Entry entry);
  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<TupleKey, Entry>& entries() const noexcept { return entries_; }

 private:
  std::map<TupleKey, Entry> entries_;
};

struct DspOptions {
  int max_pairs = 6;
};

/// Exact k-DSP (congestion 1) on a Dag by memoized divide and conquer over the
/// topological order. Each interval is split in half; demands crossing the
/// split are routed through a guessed set of boundary edges and the two halves
/// are solved recursively.
class DisjointShortestSolver {
 public:
  explicit DisjointShortestSolver(const Dag& dag, DspOptions options = {});
  DisjointShortestSolver(const Dag& dag, DistanceMatrix dm, DspOptions options = {});

  /// Paths returned in the order of `pairs`. Throws Error(kLimitExceeded) when
  /// |pairs| exceeds the configured cap.
  std::optional<Solution> solve(std::span<const Demand> pairs);

  const MemoStore& memo() const noexcept { return memo_; }
  const DistanceMatrix& distances() const noexcept { return dm_; }
  const Dag& dag() const noexcept { return dag_; }
  Interval whole() const noexcept { return {0, dag_.vertex_count()}; }

 private:
  const MemoStore::Entry& solve_tuple(const TupleKey& key);
  MemoStore::Entry compute(const TupleKey& key);
  bool prunable(const TupleKey& key) const;

  const Dag& dag_;
  DistanceMatrix dm_;
  DspOptions options_;
  MemoStore memo_;
};

std::optional<Solution> solve_disjoint_shortest(const Dag& dag, std::span<const Demand> pairs,
                                                DspOptions options = {});

struct OracleOptions {
  std::int64_t max_combinations = 1'000'000;
};

/// Enumerates all shortest paths per demand and backtracks over combinations
/// in demand order, honoring the instance's congestion budget and mode.
/// Returns the lexicographically first feasible combination. Throws
/// Error(kOracleTooLarge) when the product of per-demand path counts exceeds
/// the bound.
std::optional<Solution> brute_force_oracle(const Instance& inst, OracleOptions options = {});

/// All shortest s->t paths in lexicographic vertex order.
std::vector<Path> enumerate_shortest_paths(const Dag& dag, const DistanceMatrix& dm, VertexId s,
                                           VertexId t);

/// Number of shortest s->t paths, saturating at `cap`.
std::int64_t count_shortest_paths(const Dag& dag, const DistanceMatrix& dm, VertexId s, VertexId t,
                                  std::int64_t cap);

}  // namespace dspc
