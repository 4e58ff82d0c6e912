#include "support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace dspc::ref {

namespace {

Weight hop(const Dag& dag, VertexId u, VertexId v) {
  for (const Edge& e : dag.edges()) {
    if (e.tail == u && e.head == v) return e.weight;
  }
  return -1;
}

}  // namespace

std::vector<std::vector<VertexId>> all_paths(const Dag& dag, VertexId s, VertexId t) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> cur{s};
  std::function<void(VertexId)> go = [&](VertexId v) {
    if (v == t) {
      out.push_back(cur);
      return;
    }
    for (const Edge& e : dag.edges()) {
      if (e.tail != v) continue;
      cur.push_back(e.head);
      go(e.head);
      cur.pop_back();
    }
  };
  go(s);
  return out;
}

Weight walk_weight(const Dag& dag, const std::vector<VertexId>& walk) {
  Weight total = 0;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    const Weight w = hop(dag, walk[i], walk[i + 1]);
    if (w < 0) return -1;
    total += w;
  }
  return total;
}

Weight naive_dist(const Dag& dag, VertexId s, VertexId t) {
  Weight best = -1;
  for (const auto& p : all_paths(dag, s, t)) {
    const Weight w = walk_weight(dag, p);
    if (best < 0 || w < best) best = w;
  }
  return best;
}

bool dfs_reachable(const Dag& dag, VertexId s, VertexId t) {
  std::vector<char> seen(static_cast<std::size_t>(dag.vertex_count()) + 1, 0);
  std::vector<VertexId> stack{s};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (v == t) return true;
    if (seen[static_cast<std::size_t>(v)]) continue;
    seen[static_cast<std::size_t>(v)] = 1;
    for (const Edge& e : dag.edges()) {
      if (e.tail == v) stack.push_back(e.head);
    }
  }
  return false;
}

bool naive_feasible(const Instance& inst) {
  const Dag& dag = inst.dag;
  std::vector<std::vector<std::vector<VertexId>>> options;
  for (const Demand& d : inst.demands) {
    const Weight best = naive_dist(dag, d.source, d.terminal);
    if (best < 0) return false;
    std::vector<std::vector<VertexId>> shortest;
    for (auto& p : all_paths(dag, d.source, d.terminal)) {
      if (walk_weight(dag, p) == best) shortest.push_back(std::move(p));
    }
    options.push_back(std::move(shortest));
  }
  const bool by_edge = inst.mode == CongestionMode::kEdge;
  std::vector<int> load(by_edge ? static_cast<std::size_t>(dag.edge_count())
                                : static_cast<std::size_t>(dag.vertex_count()) + 1,
                        0);
  auto slots = [&](const std::vector<VertexId>& p) {
    std::vector<std::size_t> out;
    if (by_edge) {
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        for (EdgeIndex e = 0; e < dag.edge_count(); ++e) {
          if (dag.edge(e).tail == p[i] && dag.edge(e).head == p[i + 1]) out.push_back(static_cast<std::size_t>(e));
        }
      }
    } else {
      for (VertexId v : p) out.push_back(static_cast<std::size_t>(v));
    }
    return out;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == options.size()) return true;
    for (const auto& p : options[i]) {
      const auto used = slots(p);
      bool ok = true;
      for (auto x : used) ok = ++load[x] <= inst.congestion && ok;
      if (ok && go(i + 1)) return true;
      for (auto x : used) --load[x];
    }
    return false;
  };
  return go(0);
}

std::vector<int> recount_profile(const Dag& dag, const Solution& sol, CongestionMode mode) {
  if (mode == CongestionMode::kVertex) {
    std::vector<int> count(static_cast<std::size_t>(dag.vertex_count()) + 1, 0);
    for (const Path& p : sol.paths) {
      for (VertexId v : p.vertices) ++count[static_cast<std::size_t>(v)];
    }
    return count;
  }
  std::vector<int> count(static_cast<std::size_t>(dag.edge_count()), 0);
  for (const Path& p : sol.paths) {
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      for (EdgeIndex e = 0; e < dag.edge_count(); ++e) {
        if (dag.edge(e).tail == p.vertices[i] && dag.edge(e).head == p.vertices[i + 1]) {
          ++count[static_cast<std::size_t>(e)];
        }
      }
    }
  }
  return count;
}

std::vector<VertexId> recount_hot(const Instance& inst, const Solution& sol) {
  const auto count = recount_profile(inst.dag, sol, CongestionMode::kVertex);
  std::vector<VertexId> hot;
  for (VertexId v = 1; v <= inst.dag.vertex_count(); ++v) {
    if (count[static_cast<std::size_t>(v)] == inst.congestion) hot.push_back(v);
  }
  return hot;
}

std::int64_t count_injective_assignments(const Dag& dag,
                                         const std::vector<std::vector<EdgeIndex>>& candidates) {
  std::vector<EdgeIndex> chosen;
  std::function<std::int64_t(std::size_t)> go = [&](std::size_t i) -> std::int64_t {
    if (i == candidates.size()) return 1;
    std::int64_t total = 0;
    for (EdgeIndex e : candidates[i]) {
      bool clash = false;
      for (EdgeIndex f : chosen) {
        clash = clash || dag.edge(f).tail == dag.edge(e).tail || dag.edge(f).head == dag.edge(e).head;
      }
      if (clash) continue;
      chosen.push_back(e);
      total += go(i + 1);
      chosen.pop_back();
    }
    return total;
  };
  return go(0);
}

LayeredSolution build_layered_solution(int k, int c, int layers, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };

  // Raw ids: sources 1..k, then per layer the shared vertex and k private
  // ones, then terminals.
  const int n = 2 * k + layers * (k + 1);
  auto shared_raw = [&](int layer) { return k + (layer - 1) * (k + 1) + 1; };
  auto private_raw = [&](int layer, int i) { return shared_raw(layer) + i; };
  auto terminal_raw = [&](int i) { return k + layers * (k + 1) + i; };

  std::vector<VertexId> relabel(static_cast<std::size_t>(n) + 1);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin() + 1, relabel.end(), rng);

  std::vector<Edge> edges;
  auto link = [&](int u, int v, Weight w) {
    edges.push_back({relabel[static_cast<std::size_t>(u)], relabel[static_cast<std::size_t>(v)], w});
  };
  auto layer_vertices = [&](int layer) {
    std::vector<int> vs{shared_raw(layer)};
    for (int i = 1; i <= k; ++i) vs.push_back(private_raw(layer, i));
    return vs;
  };
  const Weight w_first = pick(1, 2);
  for (int i = 1; i <= k; ++i) {
    link(i, shared_raw(1), w_first);
    link(i, private_raw(1, i), w_first);
  }
  for (int layer = 1; layer < layers; ++layer) {
    const Weight w = pick(1, 2);
    for (int u : layer_vertices(layer)) {
      for (int v : layer_vertices(layer + 1)) link(u, v, w);
    }
  }
  const Weight w_last = pick(1, 2);
  for (int i = 1; i <= k; ++i) {
    link(shared_raw(layers), terminal_raw(i), w_last);
    link(private_raw(layers, i), terminal_raw(i), w_last);
  }

  std::vector<Demand> demands;
  for (int i = 1; i <= k; ++i) {
    demands.push_back({relabel[static_cast<std::size_t>(i)], relabel[static_cast<std::size_t>(terminal_raw(i))]});
  }
  LayeredSolution out{Instance(Dag(n, edges), demands, c, CongestionMode::kVertex), {}, {}};

  std::vector<std::vector<VertexId>> walks(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) walks[static_cast<std::size_t>(i - 1)].push_back(demands[static_cast<std::size_t>(i - 1)].source);
  std::vector<int> order(static_cast<std::size_t>(k));
  for (int layer = 1; layer <= layers; ++layer) {
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> through(static_cast<std::size_t>(k) + 1, 0);
    for (int j = 0; j < c; ++j) through[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] = 1;
    for (int i = 1; i <= k; ++i) {
      const int raw = through[static_cast<std::size_t>(i)] ? shared_raw(layer) : private_raw(layer, i);
      walks[static_cast<std::size_t>(i - 1)].push_back(relabel[static_cast<std::size_t>(raw)]);
    }
    out.shared.push_back(relabel[static_cast<std::size_t>(shared_raw(layer))]);
  }
  for (int i = 1; i <= k; ++i) {
    walks[static_cast<std::size_t>(i - 1)].push_back(demands[static_cast<std::size_t>(i - 1)].terminal);
    out.solution.paths.push_back(make_path(out.instance.dag, walks[static_cast<std::size_t>(i - 1)]));
  }
  return out;
}

LayeredSolution random_layered_solution(std::uint64_t seed) {
  static constexpr std::pair<int, int> kShapes[] = {{4, 3}, {5, 4}, {6, 5}, {7, 5}, {8, 6}, {7, 6}};
  std::mt19937_64 rng(seed * 7919 + 13);
  const auto [k, c] = kShapes[rng() % std::size(kShapes)];
  const int layers = 3 + static_cast<int>(rng() % 6);
  return build_layered_solution(k, c, layers, seed);
}

}  // namespace dspc::ref

namespace dspc::ref {

std::vector<SwapContext> valid_swap_contexts(const Instance& inst, const Solution& sol) {
  std::vector<VertexId> hot = recount_hot(inst, sol);
  std::sort(hot.begin(), hot.end(), [&](VertexId a, VertexId b) {
    return inst.dag.topo_position(a) < inst.dag.topo_position(b);
  });
  auto on = [](const Path& p, VertexId v) { return std::find(p.vertices.begin(), p.vertices.end(), v) != p.vertices.end(); };
  std::vector<SwapContext> out;
  const int k = static_cast<int>(sol.paths.size());
  for (int a = 0; a < k; ++a) {
    const Path& carrier = sol.paths[static_cast<std::size_t>(a)];
    for (std::size_t b = 0; b < hot.size(); ++b) {
      if (on(carrier, hot[b])) continue;
      VertexId lo = 0, hi = 0;
      for (std::size_t r = b; r-- > 0 && !lo;) {
        if (on(carrier, hot[r])) lo = hot[r];
      }
      for (std::size_t r = b + 1; r < hot.size() && !hi; ++r) {
        if (on(carrier, hot[r])) hi = hot[r];
      }
      if (!lo || !hi) continue;
      for (int x = 0; x < k; ++x) {
        const Path& donor = sol.paths[static_cast<std::size_t>(x)];
        if (x != a && on(donor, lo) && on(donor, hot[b]) && on(donor, hi)) {
          out.push_back(SwapContext{hot, a, x, hot[b], {lo, hi}});
        }
      }
    }
  }
  return out;
}

}  // namespace dspc::ref
