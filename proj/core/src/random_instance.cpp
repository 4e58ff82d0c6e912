#include "dspc/random_instance.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dspc/distances.hpp"
#include "dspc/errors.hpp"

namespace dspc {

Instance random_instance(const RandomDagParams& params, std::uint64_t seed) {
  if (params.vertex_count < 1 || params.demand_count < 1 || params.congestion < 1 ||
      params.max_weight < 1) {
    throw Error(ErrorCode::kInvariantViolation, "random instance parameters must be positive");
  }
  Rng rng(seed);
  const int n = params.vertex_count;
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(rng.uniform(0, i))]);
  }
  std::vector<Edge> edges;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      if (rng.chance(params.edge_percent, 100)) {
        edges.push_back({order[static_cast<std::size_t>(p)], order[static_cast<std::size_t>(q)],
                         rng.uniform(1, params.max_weight)});
      }
    }
  }
  Dag dag(n, std::move(edges));
  std::vector<std::pair<VertexId, VertexId>> candidates;
  if (params.prefer_reachable) {
    const DistanceMatrix dm(dag);
    for (VertexId s = 1; s <= n; ++s) {
      for (VertexId t = 1; t <= n; ++t) {
        if (s != t && dm.reachable(s, t)) candidates.emplace_back(s, t);
      }
    }
  }
  std::vector<Demand> demands;
  for (int i = 0; i < params.demand_count; ++i) {
    if (!candidates.empty()) {
      const auto& [s, t] = candidates[static_cast<std::size_t>(
          rng.uniform(0, static_cast<int>(candidates.size()) - 1))];
      demands.push_back({s, t});
    } else {
      demands.push_back({rng.uniform(1, n), rng.uniform(1, n)});
    }
  }
  return Instance(std::move(dag), std::move(demands), params.congestion, params.mode);
}

ColoredGraph random_colored_graph(const RandomColoredParams& params, std::uint64_t seed) {
  const int n = params.vertex_count;
  const int k = params.colors;
  if (k < 1 || n < k) throw Error(ErrorCode::kInvariantViolation, "need at least one vertex per color");
  Rng rng(seed);
  std::vector<int> colors;
  for (int c = 1; c <= k; ++c) colors.push_back(c);
  for (int v = k + 1; v <= n; ++v) colors.push_back(rng.uniform(1, k));
  std::sort(colors.begin(), colors.end());

  ColoredGraph cg;
  cg.colors = k;
  cg.graph.vertex_count = n;
  cg.color.push_back(0);
  cg.color.insert(cg.color.end(), colors.begin(), colors.end());
  std::set<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (rng.chance(params.edge_percent, 100)) edges.insert({u, v});
    }
  }
  if (params.plant_clique) {
    std::vector<int> pick;
    for (int c = 1; c <= k; ++c) {
      std::vector<int> members;
      for (int v = 1; v <= n; ++v) {
        if (cg.color[static_cast<std::size_t>(v)] == c) members.push_back(v);
      }
      pick.push_back(members[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(members.size()) - 1))]);
    }
    for (std::size_t a = 0; a < pick.size(); ++a) {
      for (std::size_t b = a + 1; b < pick.size(); ++b) edges.insert(std::minmax(pick[a], pick[b]));
    }
  }
  cg.graph.edges.assign(edges.begin(), edges.end());
  return cg;
}

HostGraph random_host_graph(const PatternGraph& pattern, const RandomHostParams& params,
                            std::uint64_t seed) {
  if (params.class_size < 1) throw Error(ErrorCode::kInvariantViolation, "class size must be >= 1");
  Rng rng(seed);
  const int h = pattern.vertex_count;
  HostGraph host;
  host.class_sizes.assign(static_cast<std::size_t>(h), params.class_size);
  std::vector<int> image;
  for (int i = 0; i < h; ++i) image.push_back(rng.uniform(1, params.class_size));

  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> seen;
  auto add = [&](HostVertex a, HostVertex b) {
    if (seen.insert({{a.cls, a.index}, {b.cls, b.index}}).second) host.edges.emplace_back(a, b);
  };
  for (auto [ua, ub] : pattern.edges) {
    const int a = std::min(ua, ub), b = std::max(ua, ub);
    for (int j1 = 1; j1 <= params.class_size; ++j1) {
      for (int j2 = 1; j2 <= params.class_size; ++j2) {
        if (rng.chance(params.edge_percent, 100)) add({a, j1}, {b, j2});
      }
    }
    if (params.plant_homomorphism) {
      add({a, image[static_cast<std::size_t>(a - 1)]}, {b, image[static_cast<std::size_t>(b - 1)]});
    }
  }
  return host;
}

}  // namespace dspc
