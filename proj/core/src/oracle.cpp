#include <algorithm>
#include <string>

#include "dspc/dsp_exact.hpp"
#include "dspc/errors.hpp"

namespace dspc {

namespace {

bool tight(const DistanceMatrix& dm, const Edge& e, VertexId s, VertexId t) {
  return on_shortest_path(dm, e, s, t);
}

std::int64_t saturating_add(std::int64_t a, std::int64_t b, std::int64_t cap) {
  return (a >= cap - b) ? cap : a + b;
}

std::int64_t saturating_mul(std::int64_t a, std::int64_t b, std::int64_t cap) {
  if (a == 0 || b == 0) return 0;
  return (a > cap / b) ? cap + 1 : a * b;
}

}  // namespace

std::int64_t count_shortest_paths(const Dag& dag, const DistanceMatrix& dm, VertexId s, VertexId t,
                                  std::int64_t cap) {
  if (!dm.reachable(s, t)) return 0;
  std::vector<std::int64_t> ways(static_cast<std::size_t>(dag.vertex_count()) + 1, 0);
  ways[static_cast<std::size_t>(s)] = 1;
  const auto topo = dag.topo();
  const auto end = static_cast<std::size_t>(dag.topo_position(t));
  for (auto pos = static_cast<std::size_t>(dag.topo_position(s)); pos <= end; ++pos) {
    const VertexId u = topo[pos];
    const std::int64_t w = ways[static_cast<std::size_t>(u)];
    if (w == 0 || u == t) continue;
    for (EdgeIndex e : dag.out_edges(u)) {
      const Edge& edge = dag.edge(e);
      if (!tight(dm, edge, s, t)) continue;
      auto& slot = ways[static_cast<std::size_t>(edge.head)];
      slot = saturating_add(slot, w, cap);
    }
  }
  return ways[static_cast<std::size_t>(t)];
}

std::vector<Path> enumerate_shortest_paths(const Dag& dag, const DistanceMatrix& dm, VertexId s,
                                           VertexId t) {
  std::vector<Path> out;
  if (!dm.reachable(s, t)) return out;
  const Weight total = dm.dist(s, t);
  std::vector<VertexId> stack{s};
  std::function<void(VertexId)> dfs = [&](VertexId u) {
    if (u == t) {
      out.push_back(Path{stack, total});
      return;
    }
    for (EdgeIndex e : dag.out_edges(u)) {
      const Edge& edge = dag.edge(e);
      if (!tight(dm, edge, s, t)) continue;
      stack.push_back(edge.head);
      dfs(edge.head);
      stack.pop_back();
    }
  };
  dfs(s);
  return out;
}

std::optional<Solution> brute_force_oracle(const Instance& inst, OracleOptions options) {
  const DistanceMatrix dm(inst.dag);
  const std::int64_t cap = options.max_combinations;
  std::int64_t product = 1;
  for (const Demand& d : inst.demands) {
    const std::int64_t count = count_shortest_paths(inst.dag, dm, d.source, d.terminal, cap + 1);
    product = saturating_mul(product, count, cap);
  }
  if (product == 0) return std::nullopt;
  if (product > cap) {
    throw Error(ErrorCode::kOracleTooLarge,
                "more than " + std::to_string(cap) + " shortest-path combinations");
  }

  const bool vertex_mode = inst.mode == CongestionMode::kVertex;
  std::vector<std::vector<Path>> options_per_demand;
  // Vertex ids (vertex mode) or edge indices (edge mode) used by each option.
  std::vector<std::vector<std::vector<std::int32_t>>> usage;
  for (const Demand& d : inst.demands) {
    auto paths = enumerate_shortest_paths(inst.dag, dm, d.source, d.terminal);
    std::vector<std::vector<std::int32_t>> used;
    for (const Path& p : paths) {
      std::vector<std::int32_t> items;
      if (vertex_mode) {
        items.assign(p.vertices.begin(), p.vertices.end());
      } else {
        for (std::size_t i = 1; i < p.vertices.size(); ++i) {
          items.push_back(*inst.dag.find_edge(p.vertices[i - 1], p.vertices[i]));
        }
      }
      used.push_back(std::move(items));
    }
    options_per_demand.push_back(std::move(paths));
    usage.push_back(std::move(used));
  }

  const std::size_t slots = vertex_mode ? static_cast<std::size_t>(inst.dag.vertex_count()) + 1
                                        : static_cast<std::size_t>(inst.dag.edge_count());
  std::vector<int> load(slots, 0);
  std::vector<std::size_t> choice(inst.demands.size(), 0);
  const std::size_t k = inst.demands.size();

  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) return true;
    for (std::size_t j = 0; j < options_per_demand[i].size(); ++j) {
      const auto& items = usage[i][j];
      bool fits = true;
      for (auto x : items) {
        if (load[static_cast<std::size_t>(x)] + 1 > inst.congestion) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (auto x : items) ++load[static_cast<std::size_t>(x)];
      choice[i] = j;
      if (rec(i + 1)) return true;
      for (auto x : items) --load[static_cast<std::size_t>(x)];
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  Solution sol;
  for (std::size_t i = 0; i < k; ++i) sol.paths.push_back(options_per_demand[i][choice[i]]);
  return sol;
}

}  // namespace dspc
