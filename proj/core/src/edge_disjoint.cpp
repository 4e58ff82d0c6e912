#include "dspc/edge_disjoint.hpp"

#include <string>

#include "dspc/congestion_transform.hpp"
#include "dspc/errors.hpp"
#include "dspc/kernelizer.hpp"
#include "dspc/verify.hpp"

namespace dspc {

std::pair<Instance, EdgeNodeMap> edge_split_transform(const Instance& inst) {
  if (inst.mode != CongestionMode::kEdge) {
    throw Error(ErrorCode::kInvariantViolation, "edge split expects an edge-mode instance");
  }
  const Dag& g = inst.dag;
  const EdgeIndex m = g.edge_count();
  const int k = inst.k();
  EdgeNodeMap map;
  map.node_of_edge.resize(static_cast<std::size_t>(m));
  map.edge_of_node.assign(static_cast<std::size_t>(m + 2 * k) + 1, -1);
  std::vector<std::string> labels(static_cast<std::size_t>(m + 2 * k) + 1);
  for (EdgeIndex e = 0; e < m; ++e) {
    map.node_of_edge[static_cast<std::size_t>(e)] = e + 1;
    map.edge_of_node[static_cast<std::size_t>(e + 1)] = e;
    const Edge& edge = g.edge(e);
    labels[static_cast<std::size_t>(e + 1)] =
        "e(" + std::to_string(edge.tail) + "," + std::to_string(edge.head) + ")";
  }

  std::vector<Edge> arcs;
  for (EdgeIndex e1 = 0; e1 < m; ++e1) {
    for (EdgeIndex e2 : g.out_edges(g.edge(e1).head)) {
      arcs.push_back({e1 + 1, e2 + 1, g.edge(e2).weight});
    }
  }
  std::vector<Demand> demands;
  for (int i = 0; i < k; ++i) {
    const Demand& d = inst.demands[static_cast<std::size_t>(i)];
    const VertexId src = m + 2 * i + 1;
    const VertexId dst = m + 2 * i + 2;
    map.endpoint_node.emplace_back(src, dst);
    labels[static_cast<std::size_t>(src)] = "src" + std::to_string(i + 1);
    labels[static_cast<std::size_t>(dst)] = "dst" + std::to_string(i + 1);
    for (EdgeIndex e : g.out_edges(d.source)) arcs.push_back({src, e + 1, g.edge(e).weight});
    for (EdgeIndex e : g.in_edges(d.terminal)) arcs.push_back({e + 1, dst, 0});
    if (d.source == d.terminal) arcs.push_back({src, dst, 0});
    demands.push_back({src, dst});
  }
  Dag h(m + 2 * k, std::move(arcs), true, std::move(labels));
  return {Instance(std::move(h), std::move(demands), inst.congestion, CongestionMode::kVertex),
          std::move(map)};
}

Solution project_edge_solution(const Solution& h_sol, const EdgeNodeMap& map,
                               const Instance& g_inst) {
  Solution out;
  for (std::size_t i = 0; i < h_sol.paths.size(); ++i) {
    std::vector<VertexId> vertices{g_inst.demands[i].source};
    for (VertexId x : h_sol.paths[i].vertices) {
      if (x < 1 || static_cast<std::size_t>(x) >= map.edge_of_node.size()) {
        throw Error(ErrorCode::kProjectionInvalid, "path uses unknown vertex " + std::to_string(x));
      }
      const EdgeIndex e = map.edge_of_node[static_cast<std::size_t>(x)];
      if (e >= 0) vertices.push_back(g_inst.dag.edge(e).head);
    }
    const auto weight = path_weight(g_inst.dag, vertices);
    if (!weight) throw Error(ErrorCode::kProjectionInvalid, "projected sequence is not a path");
    out.paths.push_back(Path{std::move(vertices), *weight});
  }
  return out;
}

std::optional<Solution> solve_edsp(const Instance& inst, EdspOptions options) {
  auto [h, map] = edge_split_transform(inst);
  auto h_sol = options.use_kernel ? solve_kdspc(h, options.dsp) : solve_with_congestion(h, options.dsp);
  if (!h_sol) return std::nullopt;
  Solution sol = project_edge_solution(*h_sol, map, inst);
  const VerifyReport report = verify_solution(inst, sol);
  if (!report.feasible) {
    throw Error(ErrorCode::kProjectionInvalid, report.violations.front().describe());
  }
  return sol;
}

}  // namespace dspc
