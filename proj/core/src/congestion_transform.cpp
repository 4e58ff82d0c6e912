#include "dspc/congestion_transform.hpp"

#include <algorithm>
#include <string>

#include "dspc/errors.hpp"
#include "dspc/verify.hpp"

namespace dspc {

TransformMap TransformMap::compose(const TransformMap& first, const TransformMap& second) {
  TransformMap out;
  out.forward.resize(first.forward.size());
  for (std::size_t v = 1; v < first.forward.size(); ++v) {
    for (VertexId mid : first.forward[v]) {
      const auto& copies = second.forward[static_cast<std::size_t>(mid)];
      out.forward[v].insert(out.forward[v].end(), copies.begin(), copies.end());
    }
  }
  out.backward.resize(second.backward.size(), 0);
  for (std::size_t x = 1; x < second.backward.size(); ++x) {
    const VertexId mid = second.backward[x];
    out.backward[x] = mid == 0 ? 0 : first.backward[static_cast<std::size_t>(mid)];
  }
  out.terminal_gadget = second.terminal_gadget;
  return out;
}

std::pair<Instance, TransformMap> isolate_terminals(const Instance& inst) {
  if (inst.mode != CongestionMode::kVertex) {
    throw Error(ErrorCode::kInvariantViolation, "terminal isolation expects a vertex-mode instance");
  }
  const VertexId n = inst.dag.vertex_count();
  const int k = inst.k();
  std::vector<Edge> edges(inst.dag.edges().begin(), inst.dag.edges().end());
  std::vector<Demand> demands;
  TransformMap tm;
  tm.forward.resize(static_cast<std::size_t>(n) + 1);
  tm.backward.assign(static_cast<std::size_t>(n + 2 * k) + 1, 0);
  for (VertexId v = 1; v <= n; ++v) {
    tm.forward[static_cast<std::size_t>(v)] = {v};
    tm.backward[static_cast<std::size_t>(v)] = v;
  }
  std::vector<std::string> labels;
  if (!inst.dag.labels().empty()) {
    labels.assign(inst.dag.labels().begin(), inst.dag.labels().end());
  }
  for (int i = 0; i < k; ++i) {
    const Demand& d = inst.demands[static_cast<std::size_t>(i)];
    const VertexId s_new = n + 2 * i + 1;
    const VertexId t_new = n + 2 * i + 2;
    edges.push_back({s_new, d.source, 1});
    edges.push_back({d.terminal, t_new, 1});
    demands.push_back({s_new, t_new});
    tm.terminal_gadget.emplace_back(s_new, t_new);
    if (!labels.empty()) {
      labels.push_back("src'" + std::to_string(i + 1));
      labels.push_back("dst'" + std::to_string(i + 1));
    }
  }
  Dag dag(n + 2 * k, std::move(edges), inst.dag.transformed(), std::move(labels));
  return {Instance(std::move(dag), std::move(demands), inst.congestion, inst.mode), std::move(tm)};
}

std::pair<Instance, TransformMap> expand_congestion(const Instance& inst, CopyWiring wiring) {
  if (inst.mode != CongestionMode::kVertex) {
    throw Error(ErrorCode::kInvariantViolation, "congestion expansion expects a vertex-mode instance");
  }
  const Dag& g = inst.dag;
  const VertexId n = g.vertex_count();
  std::vector<char> terminal(static_cast<std::size_t>(n) + 1, 0);
  for (const Demand& d : inst.demands) {
    for (VertexId v : {d.source, d.terminal}) {
      if (terminal[static_cast<std::size_t>(v)]) {
        throw Error(ErrorCode::kInvariantViolation,
                    "terminals are not isolated: vertex " + std::to_string(v) + " is shared");
      }
      terminal[static_cast<std::size_t>(v)] = 1;
    }
    if (!g.in_edges(d.source).empty() || !g.out_edges(d.terminal).empty()) {
      throw Error(ErrorCode::kInvariantViolation,
                  "terminals are not isolated; call isolate_terminals first");
    }
  }

  // Congestion never exceeds k, so more than k copies are never used.
  const int copies = std::min(inst.congestion, inst.k());
  TransformMap tm;
  tm.forward.resize(static_cast<std::size_t>(n) + 1);
  tm.backward.push_back(0);
  VertexId next = 1;
  for (VertexId v = 1; v <= n; ++v) {
    const int count = terminal[static_cast<std::size_t>(v)] ? 1 : copies;
    for (int i = 0; i < count; ++i) {
      tm.forward[static_cast<std::size_t>(v)].push_back(next);
      tm.backward.push_back(v);
      ++next;
    }
  }
  const VertexId new_n = next - 1;

  auto copy_of = [&](VertexId v, int i) {
    const auto& ids = tm.forward[static_cast<std::size_t>(v)];
    return ids.size() == 1 ? ids.front() : ids[static_cast<std::size_t>(i)];
  };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const auto tails = static_cast<int>(tm.forward[static_cast<std::size_t>(e.tail)].size());
    const auto heads = static_cast<int>(tm.forward[static_cast<std::size_t>(e.head)].size());
    if (wiring == CopyWiring::kSameIndex || tails == 1 || heads == 1) {
      for (int i = 0; i < std::max(tails, heads); ++i) {
        edges.push_back({copy_of(e.tail, i), copy_of(e.head, i), e.weight});
      }
      continue;
    }
    for (int i = 0; i < tails; ++i) {
      for (int j = 0; j < heads; ++j) edges.push_back({copy_of(e.tail, i), copy_of(e.head, j), e.weight});
    }
  }

  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels.push_back({});
    for (VertexId x = 1; x <= new_n; ++x) {
      const VertexId v = tm.backward[static_cast<std::size_t>(x)];
      const auto& ids = tm.forward[static_cast<std::size_t>(v)];
      std::string base = g.label(v);
      if (ids.size() > 1) {
        const auto idx = std::find(ids.begin(), ids.end(), x) - ids.begin();
        base += "^" + std::to_string(idx + 1);
      }
      labels.push_back(std::move(base));
    }
  }

  std::vector<Demand> demands;
  for (const Demand& d : inst.demands) {
    const Demand mapped{copy_of(d.source, 0), copy_of(d.terminal, 0)};
    demands.push_back(mapped);
    tm.terminal_gadget.emplace_back(mapped.source, mapped.terminal);
  }
  Dag dag(new_n, std::move(edges), true, std::move(labels));
  return {Instance(std::move(dag), std::move(demands), 1, CongestionMode::kVertex), std::move(tm)};
}

Solution project_solution(const Solution& sol, const TransformMap& tm, const Instance& original) {
  Solution out;
  for (const Path& p : sol.paths) {
    std::vector<VertexId> vertices;
    for (VertexId x : p.vertices) {
      if (x < 1 || static_cast<std::size_t>(x) >= tm.backward.size()) {
        throw Error(ErrorCode::kProjectionInvalid, "path uses unknown vertex " + std::to_string(x));
      }
      const VertexId v = tm.backward[static_cast<std::size_t>(x)];
      if (v != 0) vertices.push_back(v);
    }
    const auto weight = path_weight(original.dag, vertices);
    if (!weight) throw Error(ErrorCode::kProjectionInvalid, "projected sequence is not a path");
    out.paths.push_back(Path{std::move(vertices), *weight});
  }
  if (static_cast<int>(out.paths.size()) != original.k()) {
    throw Error(ErrorCode::kProjectionInvalid, "projected solution has the wrong number of paths");
  }
  const VerifyReport report = verify_solution(original, out);
  if (!report.feasible) {
    throw Error(ErrorCode::kProjectionInvalid, report.violations.front().describe());
  }
  return out;
}

std::optional<Solution> solve_with_congestion(const Instance& inst, DspOptions options) {
  auto [isolated, iso_map] = isolate_terminals(inst);
  auto [expanded, exp_map] = expand_congestion(isolated);
  const TransformMap tm = TransformMap::compose(iso_map, exp_map);
  auto sol = solve_disjoint_shortest(expanded.dag, expanded.demands, options);
  if (!sol) return std::nullopt;
  // Every copy carries at most one transformed path.
  std::vector<char> used(static_cast<std::size_t>(expanded.dag.vertex_count()) + 1, 0);
  for (const Path& p : sol->paths) {
    for (VertexId v : p.vertices) {
      if (used[static_cast<std::size_t>(v)]) {
        throw Error(ErrorCode::kProjectionInvalid, "transformed paths are not vertex-disjoint");
      }
      used[static_cast<std::size_t>(v)] = 1;
    }
  }
  return project_solution(*sol, tm, inst);
}

}  // namespace dspc
