#include "dspc/distances.hpp"

namespace dspc {

DistanceMatrix::DistanceMatrix(const Dag& dag) : n_(dag.vertex_count()) {
  const auto n = static_cast<std::size_t>(n_);
  dist_.assign(n * n, kInfinity);
  const auto topo = dag.topo();
  for (VertexId s = 1; s <= n_; ++s) {
    Weight* row = dist_.data() + static_cast<std::size_t>(s - 1) * n;
    row[s - 1] = 0;
    for (std::size_t pos = static_cast<std::size_t>(dag.topo_position(s)); pos < topo.size(); ++pos) {
      const VertexId u = topo[pos];
      const Weight du = row[u - 1];
      if (du == kInfinity) continue;
      for (EdgeIndex e : dag.out_edges(u)) {
        const Edge& edge = dag.edge(e);
        Weight& dv = row[edge.head - 1];
        if (du + edge.weight < dv) dv = du + edge.weight;
      }
    }
  }
}

DistanceMatrix all_pairs_dist(const Dag& dag) { return DistanceMatrix(dag); }

bool reachable(const Dag& dag, VertexId s, VertexId t) {
  return DistanceMatrix(dag).reachable(s, t);
}

bool is_shortest(const Path& path, const DistanceMatrix& dm) {
  if (path.vertices.empty()) return false;
  return path.length == dm.dist(path.vertices.front(), path.vertices.back());
}

std::optional<Path> canonical_shortest_path(const Dag& dag, const DistanceMatrix& dm, VertexId s,
                                            VertexId t) {
  if (!dm.reachable(s, t)) return std::nullopt;
  Path path{{s}, dm.dist(s, t)};
  VertexId u = s;
  while (u != t) {
    const Weight remaining = dm.dist(u, t);
    VertexId next = 0;
    // out_edges are sorted by head id, so the first tight edge is the smallest.
    for (EdgeIndex e : dag.out_edges(u)) {
      const Edge& edge = dag.edge(e);
      const Weight rest = dm.dist(edge.head, t);
      if (rest != kInfinity && edge.weight + rest == remaining) {
        next = edge.head;
        break;
      }
    }
    path.vertices.push_back(next);
    u = next;
  }
  return path;
}

}  // namespace dspc
