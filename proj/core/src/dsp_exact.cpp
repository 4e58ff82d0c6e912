#include "dspc/dsp_exact.hpp"

#include <algorithm>
#include <string>

#include "dspc/errors.hpp"

namespace dspc {

std::pair<Interval, Interval> split_interval(Interval interval) {
  if (interval.size() < 2) {
    throw Error(ErrorCode::kInvariantViolation, "cannot split an interval of length " +
                                                    std::to_string(interval.size()));
  }
  const std::int32_t mid = interval.lo + (interval.size() + 1) / 2;
  return {{interval.lo, mid}, {mid, interval.hi}};
}

TupleKey TupleKey::canonical(Interval interval, std::vector<Demand> pairs) {
  std::sort(pairs.begin(), pairs.end());
  return {interval, std::move(pairs)};
}

std::vector<EdgeIndex> crossing_edges(const Dag& dag, Interval left, Interval right) {
  std::vector<EdgeIndex> result;
  // Walk the out-edges of left vertices that reach the right interval.
  const auto topo = dag.topo();
  for (std::int32_t pos = left.lo; pos < left.hi; ++pos) {
    for (EdgeIndex e : dag.out_edges(topo[static_cast<std::size_t>(pos)])) {
      if (right.contains(dag.topo_position(dag.edge(e).head))) result.push_back(e);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::int64_t enumerate_boundary_sets(const Dag& dag,
                                     std::span<const std::vector<EdgeIndex>> candidates,
                                     const std::function<bool(const BoundaryEdgeSet&)>& visit) {
  const std::size_t t = candidates.size();
  if (t == 0) return 0;
  std::vector<char> tail_used(static_cast<std::size_t>(dag.vertex_count()) + 1, 0);
  std::vector<char> head_used(tail_used.size(), 0);
  BoundaryEdgeSet current;
  current.edges.resize(t);
  std::int64_t visited = 0;
  bool stop = false;

  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == t) {
      ++visited;
      if (!visit(current)) stop = true;
      return;
    }
    for (EdgeIndex e : candidates[depth]) {
      const Edge& edge = dag.edge(e);
      auto& tu = tail_used[static_cast<std::size_t>(edge.tail)];
      auto& hu = head_used[static_cast<std::size_t>(edge.head)];
      if (tu || hu) continue;
      tu = hu = 1;
      current.edges[depth] = e;
      rec(depth + 1);
      tu = hu = 0;
      if (stop) return;
    }
  };
  rec(0);
  return visited;
}

std::int64_t enumerate_boundary_sets(const Dag& dag, Interval left, Interval right,
                                     std::span<const Demand> crossing_demands,
                                     const std::function<bool(const BoundaryEdgeSet&)>& visit) {
  const std::vector<EdgeIndex> edges = crossing_edges(dag, left, right);
  std::vector<std::vector<EdgeIndex>> candidates(crossing_demands.size(), edges);
  return enumerate_boundary_sets(dag, candidates, visit);
}

std::optional<Solution> merge_check(const Dag& dag, const DistanceMatrix& dm,
                                    const Solution& left_sol, const Solution& right_sol,
                                    const BoundaryEdgeSet& bset,
                                    std::span<const Demand> crossing_demands) {
  const std::size_t t = crossing_demands.size();
  if (left_sol.paths.size() != t || right_sol.paths.size() != t || bset.edges.size() != t) {
    return std::nullopt;
  }
  Solution merged;
  merged.paths.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    const Path& lp = left_sol.paths[i];
    const Path& rp = right_sol.paths[i];
    const Edge& e = dag.edge(bset.edges[i]);
    const Demand& d = crossing_demands[i];
    if (lp.vertices.empty() || rp.vertices.empty()) return std::nullopt;
    if (lp.vertices.front() != d.source || lp.vertices.back() != e.tail) return std::nullopt;
    if (rp.vertices.front() != e.head || rp.vertices.back() != d.terminal) return std::nullopt;
    const Weight total = lp.length + e.weight + rp.length;
    if (total != dm.dist(d.source, d.terminal)) return std::nullopt;
    Path p;
    p.vertices.reserve(lp.vertices.size() + rp.vertices.size());
    p.vertices.insert(p.vertices.end(), lp.vertices.begin(), lp.vertices.end());
    p.vertices.insert(p.vertices.end(), rp.vertices.begin(), rp.vertices.end());
    p.length = total;
    merged.paths.push_back(std::move(p));
  }
  std::vector<char> seen(static_cast<std::size_t>(dag.vertex_count()) + 1, 0);
  for (const Path& p : merged.paths) {
    for (VertexId v : p.vertices) {
      if (seen[static_cast<std::size_t>(v)]) return std::nullopt;
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  return merged;
}

const MemoStore::Entry* MemoStore::find(const TupleKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

const MemoStore::Entry& MemoStore::insert(TupleKey key, Entry entry) {
  return entries_.try_emplace(std::move(key), std::move(entry)).first->second;
}

DisjointShortestSolver::DisjointShortestSolver(const Dag& dag, DspOptions options)
    : DisjointShortestSolver(dag, DistanceMatrix(dag), options) {}

DisjointShortestSolver::DisjointShortestSolver(const Dag& dag, DistanceMatrix dm,
                                               DspOptions options)
    : dag_(dag), dm_(std::move(dm)), options_(options) {}

namespace {

// Index of `pair` within a canonical (sorted, duplicate-free) tuple.
std::size_t index_in(const TupleKey& key, const Demand& pair) {
  auto it = std::lower_bound(key.pairs.begin(), key.pairs.end(), pair);
  return static_cast<std::size_t>(it - key.pairs.begin());
}

}  // namespace

std::optional<Solution> DisjointShortestSolver::solve(std::span<const Demand> pairs) {
  if (static_cast<int>(pairs.size()) > options_.max_pairs) {
    throw Error(ErrorCode::kLimitExceeded, std::to_string(pairs.size()) +
                                               " demands exceed the cap of " +
                                               std::to_string(options_.max_pairs));
  }
  for (const Demand& d : pairs) {
    if (!dag_.valid_vertex(d.source) || !dag_.valid_vertex(d.terminal)) {
      throw Error(ErrorCode::kInvariantViolation, "demand names an unknown vertex");
    }
  }
  if (pairs.empty()) return Solution{};
  const TupleKey key = TupleKey::canonical(whole(), {pairs.begin(), pairs.end()});
  const MemoStore::Entry& entry = solve_tuple(key);
  if (!entry) return std::nullopt;
  Solution out;
  for (const Demand& d : pairs) out.paths.push_back(entry->paths[index_in(key, d)]);
  return out;
}

const MemoStore::Entry& DisjointShortestSolver::solve_tuple(const TupleKey& key) {
  if (const auto* hit = memo_.find(key)) return *hit;
  MemoStore::Entry entry = compute(key);
  return memo_.insert(key, std::move(entry));
}

bool DisjointShortestSolver::prunable(const TupleKey& key) const {
  std::vector<VertexId> endpoints;
  endpoints.reserve(key.pairs.size() * 2);
  for (const Demand& d : key.pairs) {
    const auto ps = dag_.topo_position(d.source);
    const auto pt = dag_.topo_position(d.terminal);
    if (!key.interval.contains(ps) || !key.interval.contains(pt)) return true;
    // Edges never point backwards in topological order.
    if (ps > pt) return true;
    if (!dm_.reachable(d.source, d.terminal)) return true;
    endpoints.push_back(d.source);
    if (d.terminal != d.source) endpoints.push_back(d.terminal);
  }
  // At congestion 1 no two demands may share an endpoint.
  std::sort(endpoints.begin(), endpoints.end());
  return std::adjacent_find(endpoints.begin(), endpoints.end()) != endpoints.end();
}

MemoStore::Entry DisjointShortestSolver::compute(const TupleKey& key) {
  if (key.pairs.empty()) return Solution{};
  if (prunable(key)) return std::nullopt;
  if (key.interval.size() == 1) {
    // After pruning, a single surviving pair (v, v) remains.
    const Demand& d = key.pairs.front();
    if (key.pairs.size() != 1 || d.source != d.terminal) return std::nullopt;
    return Solution{{Path{{d.source}, 0}}};
  }

  const auto [left, right] = split_interval(key.interval);
  std::vector<Demand> in_left, in_right, crossing;
  for (const Demand& d : key.pairs) {
    const bool s_left = left.contains(dag_.topo_position(d.source));
    const bool t_left = left.contains(dag_.topo_position(d.terminal));
    if (s_left && t_left) {
      in_left.push_back(d);
    } else if (!s_left && !t_left) {
      in_right.push_back(d);
    } else {
      crossing.push_back(d);  // source left, terminal right (backward pairs were pruned)
    }
  }

  if (crossing.empty()) {
    const TupleKey lkey = TupleKey::canonical(left, in_left);
    const TupleKey rkey = TupleKey::canonical(right, in_right);
    const MemoStore::Entry& lsol = solve_tuple(lkey);
    if (!lsol) return std::nullopt;
    const MemoStore::Entry& rsol = solve_tuple(rkey);
    if (!rsol) return std::nullopt;
    Solution out;
    for (const Demand& d : key.pairs) {
      const bool is_left = left.contains(dag_.topo_position(d.source));
      out.paths.push_back(is_left ? lsol->paths[index_in(lkey, d)] : rsol->paths[index_in(rkey, d)]);
    }
    return out;
  }

  // Only edges that can lie on a shortest path of their demand are worth
  // guessing; any other choice fails the length test in merge_check.
  const std::vector<EdgeIndex> boundary = crossing_edges(dag_, left, right);
  std::vector<std::vector<EdgeIndex>> candidates(crossing.size());
  for (std::size_t i = 0; i < crossing.size(); ++i) {
    for (EdgeIndex e : boundary) {
      if (on_shortest_path(dm_, dag_.edge(e), crossing[i].source, crossing[i].terminal)) {
        candidates[i].push_back(e);
      }
    }
    if (candidates[i].empty()) return std::nullopt;
  }

  MemoStore::Entry result;
  enumerate_boundary_sets(dag_, candidates, [&](const BoundaryEdgeSet& bset) {
    std::vector<Demand> lpairs = in_left;
    std::vector<Demand> rpairs = in_right;
    std::vector<Demand> lcross, rcross;
    for (std::size_t i = 0; i < crossing.size(); ++i) {
      const Edge& e = dag_.edge(bset.edges[i]);
      lcross.push_back({crossing[i].source, e.tail});
      rcross.push_back({e.head, crossing[i].terminal});
    }
    lpairs.insert(lpairs.end(), lcross.begin(), lcross.end());
    rpairs.insert(rpairs.end(), rcross.begin(), rcross.end());
    const TupleKey lkey = TupleKey::canonical(left, std::move(lpairs));
    const MemoStore::Entry& lsol = solve_tuple(lkey);
    if (!lsol) return true;
    const TupleKey rkey = TupleKey::canonical(right, std::move(rpairs));
    const MemoStore::Entry& rsol = solve_tuple(rkey);
    if (!rsol) return true;

    Solution lparts, rparts;
    for (std::size_t i = 0; i < crossing.size(); ++i) {
      lparts.paths.push_back(lsol->paths[index_in(lkey, lcross[i])]);
      rparts.paths.push_back(rsol->paths[index_in(rkey, rcross[i])]);
    }
    auto merged = merge_check(dag_, dm_, lparts, rparts, bset, crossing);
    if (!merged) return true;

    Solution out;
    for (const Demand& d : key.pairs) {
      auto cit = std::find(crossing.begin(), crossing.end(), d);
      if (cit != crossing.end()) {
        out.paths.push_back(merged->paths[static_cast<std::size_t>(cit - crossing.begin())]);
      } else if (left.contains(dag_.topo_position(d.source))) {
        out.paths.push_back(lsol->paths[index_in(lkey, d)]);
      } else {
        out.paths.push_back(rsol->paths[index_in(rkey, d)]);
      }
    }
    result = std::move(out);
    return false;
  });
  return result;
}

std::optional<Solution> solve_disjoint_shortest(const Dag& dag, std::span<const Demand> pairs,
                                                DspOptions options) {
  DisjointShortestSolver solver(dag, options);
  return solver.solve(pairs);
}

}  // namespace dspc
