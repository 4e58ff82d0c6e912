#include "dspc/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "dspc/errors.hpp"

namespace dspc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
    case ErrorCode::kOracleTooLarge: return "OracleTooLarge";
    case ErrorCode::kProjectionInvalid: return "ProjectionInvalid";
    case ErrorCode::kContextInvalid: return "ContextInvalid";
    case ErrorCode::kNoDonorFound: return "NoDonorFound";
    case ErrorCode::kWitnessInvalid: return "WitnessInvalid";
    case ErrorCode::kColorMissing: return "ColorMissing";
    case ErrorCode::kPatternNotCubicBipartite: return "PatternNotCubicBipartite";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.tail) + "," + std::to_string(e.head) + ")";
}

}  // namespace

std::vector<VertexId> topo_order(VertexId vertex_count, std::span<const Edge> edges) {
  const auto n = static_cast<std::size_t>(vertex_count);
  std::vector<int> indegree(n + 1, 0);
  std::vector<std::vector<VertexId>> succ(n + 1);
  for (const Edge& e : edges) {
    ++indegree[static_cast<std::size_t>(e.head)];
    succ[static_cast<std::size_t>(e.tail)].push_back(e.head);
  }
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 1; v <= vertex_count; ++v) {
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  std::vector<VertexId> order;
  order.reserve(n);
  while (!ready.empty()) {
    const VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (VertexId w : succ[static_cast<std::size_t>(v)]) {
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
  }
  if (order.size() != n) {
    throw Error(ErrorCode::kCycleDetected,
                "peeling stalled after " + std::to_string(order.size()) + " of " +
                    std::to_string(n) + " vertices");
  }
  return order;
}

std::vector<VertexId> topo_order(const Dag& dag) {
  return {dag.topo().begin(), dag.topo().end()};
}

Dag::Dag(VertexId vertex_count, std::vector<Edge> edges, bool transformed,
         std::vector<std::string> labels)
    : n_(vertex_count), edges_(std::move(edges)), transformed_(transformed),
      labels_(std::move(labels)) {
  if (n_ < 1) throw Error(ErrorCode::kInvariantViolation, "vertex count must be positive");
  if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n_) + 1) {
    throw Error(ErrorCode::kInvariantViolation, "label table must have n+1 slots");
  }
  const auto n = static_cast<std::size_t>(n_);
  out_.assign(n + 1, {});
  in_.assign(n + 1, {});
  for (EdgeIndex i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[static_cast<std::size_t>(i)];
    if (!valid_vertex(e.tail) || !valid_vertex(e.head)) {
      throw Error(ErrorCode::kInvariantViolation, "edge " + edge_text(e) + " has an id outside 1.." +
                                                      std::to_string(n_));
    }
    if (e.tail == e.head) throw Error(ErrorCode::kInvariantViolation, "self-loop " + edge_text(e));
    if (e.weight < 0 || (e.weight == 0 && !transformed_)) {
      throw Error(ErrorCode::kInvariantViolation,
                  "edge " + edge_text(e) + " has weight " + std::to_string(e.weight));
    }
    out_[static_cast<std::size_t>(e.tail)].push_back(i);
    in_[static_cast<std::size_t>(e.head)].push_back(i);
  }
  for (std::size_t v = 1; v <= n; ++v) {
    auto by_head = [this](EdgeIndex a, EdgeIndex b) { return edge(a).head < edge(b).head; };
    auto by_tail = [this](EdgeIndex a, EdgeIndex b) { return edge(a).tail < edge(b).tail; };
    std::sort(out_[v].begin(), out_[v].end(), by_head);
    std::sort(in_[v].begin(), in_[v].end(), by_tail);
    for (std::size_t i = 1; i < out_[v].size(); ++i) {
      if (edge(out_[v][i - 1]).head == edge(out_[v][i]).head) {
        throw Error(ErrorCode::kInvariantViolation, "parallel edge " + edge_text(edge(out_[v][i])));
      }
    }
  }
  topo_ = topo_order(n_, edges_);
  topo_pos_.assign(n + 1, -1);
  for (std::size_t i = 0; i < topo_.size(); ++i) {
    topo_pos_[static_cast<std::size_t>(topo_[i])] = static_cast<std::int32_t>(i);
  }
}

std::span<const EdgeIndex> Dag::out_edges(VertexId v) const {
  return out_[static_cast<std::size_t>(v)];
}

std::span<const EdgeIndex> Dag::in_edges(VertexId v) const {
  return in_[static_cast<std::size_t>(v)];
}

std::optional<EdgeIndex> Dag::find_edge(VertexId tail, VertexId head) const {
  if (!valid_vertex(tail) || !valid_vertex(head)) return std::nullopt;
  const auto& out = out_[static_cast<std::size_t>(tail)];
  auto it = std::lower_bound(out.begin(), out.end(), head,
                             [this](EdgeIndex e, VertexId h) { return edge(e).head < h; });
  if (it != out.end() && edge(*it).head == head) return *it;
  return std::nullopt;
}

const std::string& Dag::label(VertexId v) const {
  static const std::string kEmpty;
  if (labels_.empty() || !valid_vertex(v)) return kEmpty;
  return labels_[static_cast<std::size_t>(v)];
}

std::string_view mode_name(CongestionMode mode) {
  return mode == CongestionMode::kVertex ? "vertex" : "edge";
}

std::optional<CongestionMode> parse_mode(std::string_view text) {
  if (text == "vertex") return CongestionMode::kVertex;
  if (text == "edge") return CongestionMode::kEdge;
  return std::nullopt;
}

Instance::Instance(Dag g, std::vector<Demand> d, int c, CongestionMode m)
    : dag(std::move(g)), demands(std::move(d)), congestion(c), mode(m) {
  if (demands.empty()) throw Error(ErrorCode::kInvariantViolation, "instance needs k >= 1 demands");
  if (congestion < 1) throw Error(ErrorCode::kInvariantViolation, "congestion must be >= 1");
  for (const Demand& dm : demands) {
    if (!dag.valid_vertex(dm.source) || !dag.valid_vertex(dm.terminal)) {
      throw Error(ErrorCode::kInvariantViolation,
                  "demand (" + std::to_string(dm.source) + "," + std::to_string(dm.terminal) +
                      ") names an unknown vertex");
    }
  }
}

std::optional<Weight> path_weight(const Dag& dag, std::span<const VertexId> vertices) {
  if (vertices.empty()) return std::nullopt;
  for (VertexId v : vertices) {
    if (!dag.valid_vertex(v)) return std::nullopt;
  }
  Weight total = 0;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    auto e = dag.find_edge(vertices[i - 1], vertices[i]);
    if (!e) return std::nullopt;
    total += dag.edge(*e).weight;
  }
  return total;
}

Path make_path(const Dag& dag, std::vector<VertexId> vertices) {
  auto w = path_weight(dag, vertices);
  if (!w) throw Error(ErrorCode::kInvariantViolation, "vertex sequence is not a path of the graph");
  return Path{std::move(vertices), *w};
}

}  // namespace dspc
