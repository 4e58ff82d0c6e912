#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dspc {

// Vertex ids are 1-based; 0 is never a valid vertex.
using VertexId = std::int32_t;
using EdgeIndex = std::int32_t;
using Weight = std::int64_t;

struct Edge {
  VertexId tail = 0;
  VertexId head = 0;
  Weight weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted directed acyclic graph on vertices 1..n.
///
/// Construction validates every structural invariant (ids in range, no
/// self-loops, no parallel edges, acyclic, weights >= 1 unless the graph is
/// marked `transformed`, in which case weight 0 is also accepted). A Dag is
/// immutable afterwards and safe to share between threads.
class Dag {
 public:
  Dag(VertexId vertex_count, std::vector<Edge> edges, bool transformed = false,
      std::vector<std::string> labels = {});

  VertexId vertex_count() const noexcept { return n_; }
  EdgeIndex edge_count() const noexcept { return static_cast<EdgeIndex>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_[static_cast<std::size_t>(e)]; }
  bool transformed() const noexcept { return transformed_; }

  // Edge indices leaving / entering v, sorted by the opposite endpoint id.
  std::span<const EdgeIndex> out_edges(VertexId v) const;
  std::span<const EdgeIndex> in_edges(VertexId v) const;

  std::optional<EdgeIndex> find_edge(VertexId tail, VertexId head) const;

  bool valid_vertex(VertexId v) const noexcept { return v >= 1 && v <= n_; }

  // Empty string when no label was attached.
  const std::string& label(VertexId v) const;
  std::span<const std::string> labels() const noexcept { return labels_; }

  // Topological order computed at construction (smallest id first among ties).
  std::span<const VertexId> topo() const noexcept { return topo_; }
  // Position of v in topo(), 0-based.
  std::int32_t topo_position(VertexId v) const { return topo_pos_[static_cast<std::size_t>(v)]; }

 private:
  VertexId n_;
  std::vector<Edge> edges_;
  bool transformed_;
  std::vector<std::string> labels_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
  std::vector<VertexId> topo_;
  std::vector<std::int32_t> topo_pos_;
};

/// Deterministic Kahn peeling: among zero-indegree candidates the smallest id
/// is emitted first. Throws Error(kCycleDetected) when peeling stalls.
std::vector<VertexId> topo_order(VertexId vertex_count, std::span<const Edge> edges);
std::vector<VertexId> topo_order(const Dag& dag);

enum class CongestionMode { kVertex, kEdge };

std::string_view mode_name(CongestionMode mode);
std::optional<CongestionMode> parse_mode(std::string_view text);

struct Demand {
  VertexId source = 0;
  VertexId terminal = 0;

  friend auto operator<=>(const Demand&, const Demand&) = default;
};

/// A routing instance. The slack d = max(k - c, 0) is derived by slack().
struct Instance {
  Dag dag;
  std::vector<Demand> demands;
  int congestion = 1;
  CongestionMode mode = CongestionMode::kVertex;

  Instance(Dag g, std::vector<Demand> d, int c, CongestionMode m = CongestionMode::kVertex);

  int k() const noexcept { return static_cast<int>(demands.size()); }
  int slack() const noexcept { return k() > congestion ? k() - congestion : 0; }
};

struct Path {
  std::vector<VertexId> vertices;
  Weight length = 0;

  friend bool operator==(const Path&, const Path&) = default;
};

/// Builds a Path over `vertices`, summing edge weights. Throws
/// Error(kInvariantViolation) if a consecutive pair is not an edge.
Path make_path(const Dag& dag, std::vector<VertexId> vertices);

/// Sum of edge weights along `vertices`, or nullopt if some hop is missing.
std::optional<Weight> path_weight(const Dag& dag, std::span<const VertexId> vertices);

struct Solution {
  std::vector<Path> paths;

  friend bool operator==(const Solution&, const Solution&) = default;
};

}  // namespace dspc
