#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "dspc/graph.hpp"

namespace dspc {

inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max();

/// All-pairs shortest distances of a Dag, one relaxation pass per source in
/// topological order. Unreachable pairs hold kInfinity.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const Dag& dag);

  Weight dist(VertexId u, VertexId v) const {
    return dist_[index(u, v)];
  }
  bool reachable(VertexId u, VertexId v) const { return dist(u, v) != kInfinity; }
  VertexId vertex_count() const noexcept { return n_; }

 private:
  std::size_t index(VertexId u, VertexId v) const {
    return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v - 1);
  }

  VertexId n_ = 0;
  std::vector<Weight> dist_;
};

DistanceMatrix all_pairs_dist(const Dag& dag);

bool reachable(const Dag& dag, VertexId s, VertexId t);

/// True iff the path's length equals the shortest first->last distance.
bool is_shortest(const Path& path, const DistanceMatrix& dm);

/// True iff edge (tail, head) lies on some shortest source->terminal path.
inline bool on_shortest_path(const DistanceMatrix& dm, const Edge& edge, VertexId source,
                             VertexId terminal) {
  const Weight total = dm.dist(source, terminal);
  const Weight before = dm.dist(source, edge.tail);
  const Weight after = dm.dist(edge.head, terminal);
  if (total == kInfinity || before == kInfinity || after == kInfinity) return false;
  return before + edge.weight + after == total;
}

/// Lexicographically smallest minimum-weight vertex sequence from s to t,
/// found by greedy descent over the shortest-path DAG. nullopt if t is not
/// reachable from s.
std::optional<Path> canonical_shortest_path(const Dag& dag, const DistanceMatrix& dm,
                                            VertexId s, VertexId t);

}  // namespace dspc
