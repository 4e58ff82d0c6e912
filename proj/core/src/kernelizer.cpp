#include "dspc/kernelizer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dspc/congestion_transform.hpp"
#include "dspc/errors.hpp"
#include "dspc/verify.hpp"

namespace dspc {

namespace {

// Advances `idx` to the next r-combination of {0..k-1} in lexicographic order.
bool next_combination(std::vector<int>& idx, int k) {
  const int r = static_cast<int>(idx.size());
  int i = r - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == k - r + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < r; ++j) {
    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

bool contains(const Path& p, VertexId v) {
  return std::find(p.vertices.begin(), p.vertices.end(), v) != p.vertices.end();
}

std::ptrdiff_t position_in(const Path& p, VertexId v) {
  return std::find(p.vertices.begin(), p.vertices.end(), v) - p.vertices.begin();
}

int hot_on(const Path& p, const std::vector<VertexId>& hot) {
  return static_cast<int>(std::count_if(hot.begin(), hot.end(), [&](VertexId v) { return contains(p, v); }));
}

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorCode::kContextInvalid, why); }

}  // namespace

Solution extend_with_shortest(const Instance& inst, const Solution& core_solution,
                              std::span<const int> core_subset) {
  if (core_solution.paths.size() != core_subset.size()) {
    throw Error(ErrorCode::kShapeMismatch, "core solution and subset differ in size");
  }
  const DistanceMatrix dm(inst.dag);
  Solution out;
  std::size_t next_core = 0;
  for (int i = 0; i < inst.k(); ++i) {
    if (next_core < core_subset.size() && core_subset[next_core] == i) {
      out.paths.push_back(core_solution.paths[next_core++]);
      continue;
    }
    const Demand& d = inst.demands[static_cast<std::size_t>(i)];
    auto path = canonical_shortest_path(inst.dag, dm, d.source, d.terminal);
    if (!path) {
      throw Error(ErrorCode::kInvariantViolation,
                  "demand " + std::to_string(i + 1) + " has no path to extend with");
    }
    out.paths.push_back(std::move(*path));
  }
  return out;
}

std::optional<Solution> solve_kdspc(const Instance& inst, DspOptions options) {
  if (inst.mode != CongestionMode::kVertex) {
    throw Error(ErrorCode::kInvariantViolation, "solve_kdspc expects a vertex-mode instance");
  }
  const DistanceMatrix dm(inst.dag);
  for (const Demand& d : inst.demands) {
    if (!dm.reachable(d.source, d.terminal)) return std::nullopt;
  }
  const int k = inst.k();
  const int d = inst.slack();
  if (k <= 3 * d) return solve_with_congestion(inst, options);

  std::vector<int> subset(static_cast<std::size_t>(3 * d));
  for (int i = 0; i < 3 * d; ++i) subset[static_cast<std::size_t>(i)] = i;
  do {
    Solution core;
    if (!subset.empty()) {
      std::vector<Demand> demands;
      for (int i : subset) demands.push_back(inst.demands[static_cast<std::size_t>(i)]);
      const Instance sub(inst.dag, std::move(demands), 2 * d, CongestionMode::kVertex);
      auto routed = solve_with_congestion(sub, options);
      if (!routed) continue;
      core = std::move(*routed);
    }
    Solution full = extend_with_shortest(inst, core, subset);
    if (verify_solution(inst, full, dm).feasible) return full;
  } while (next_combination(subset, k));
  return std::nullopt;
}

std::vector<VertexId> find_hot_vertices(const Instance& inst, const Solution& sol) {
  const CongestionProfile profile = congestion_profile(inst.dag, sol, CongestionMode::kVertex);
  std::vector<VertexId> hot;
  for (VertexId v = 1; v <= inst.dag.vertex_count(); ++v) {
    if (profile.count[static_cast<std::size_t>(v)] == inst.congestion) hot.push_back(v);
  }
  std::sort(hot.begin(), hot.end(), [&](VertexId a, VertexId b) {
    return inst.dag.topo_position(a) < inst.dag.topo_position(b);
  });
  return hot;
}

Solution swap_subpaths(const Instance& inst, const Solution& sol, const SwapContext& ctx) {
  const int k = static_cast<int>(sol.paths.size());
  if (ctx.carrier_index < 0 || ctx.carrier_index >= k || ctx.donor_index < 0 ||
      ctx.donor_index >= k || ctx.carrier_index == ctx.donor_index) {
    invalid("carrier/donor indices out of range or equal");
  }
  if (ctx.hot_vertices != find_hot_vertices(inst, sol)) {
    invalid("hot vertex list does not match the solution");
  }
  const auto& hot = ctx.hot_vertices;
  auto rank = [&](VertexId v) -> std::ptrdiff_t {
    auto it = std::find(hot.begin(), hot.end(), v);
    if (it == hot.end()) invalid("vertex " + std::to_string(v) + " is not at congestion c");
    return it - hot.begin();
  };
  const auto [lo, hi] = ctx.window;
  const auto r_lo = rank(lo), r_pivot = rank(ctx.pivot), r_hi = rank(hi);
  if (!(r_lo < r_pivot && r_pivot < r_hi)) invalid("window does not surround the pivot");

  const Path& carrier = sol.paths[static_cast<std::size_t>(ctx.carrier_index)];
  const Path& donor = sol.paths[static_cast<std::size_t>(ctx.donor_index)];
  if (!contains(carrier, lo) || !contains(carrier, hi)) invalid("carrier misses a window end");
  if (!contains(donor, lo) || !contains(donor, ctx.pivot) || !contains(donor, hi)) {
    invalid("donor misses a window end or the pivot");
  }
  for (auto r = r_lo + 1; r < r_hi; ++r) {
    const VertexId v = hot[static_cast<std::size_t>(r)];
    if (v != ctx.pivot && contains(carrier, v)) invalid("window is not the closest around the pivot");
  }

  const auto c_lo = position_in(carrier, lo), c_hi = position_in(carrier, hi);
  const auto d_lo = position_in(donor, lo), d_hi = position_in(donor, hi);
  auto splice = [](const Path& outer, std::ptrdiff_t o_lo, std::ptrdiff_t o_hi, const Path& inner,
                   std::ptrdiff_t i_lo, std::ptrdiff_t i_hi) {
    std::vector<VertexId> v(outer.vertices.begin(), outer.vertices.begin() + o_lo);
    v.insert(v.end(), inner.vertices.begin() + i_lo, inner.vertices.begin() + i_hi + 1);
    v.insert(v.end(), outer.vertices.begin() + o_hi + 1, outer.vertices.end());
    return v;
  };
  Solution out = sol;
  Path& new_carrier = out.paths[static_cast<std::size_t>(ctx.carrier_index)];
  Path& new_donor = out.paths[static_cast<std::size_t>(ctx.donor_index)];
  new_carrier.vertices = splice(carrier, c_lo, c_hi, donor, d_lo, d_hi);
  new_donor.vertices = splice(donor, d_lo, d_hi, carrier, c_lo, c_hi);
  const auto carrier_len = path_weight(inst.dag, new_carrier.vertices);
  const auto donor_len = path_weight(inst.dag, new_donor.vertices);
  if (!carrier_len || !donor_len) invalid("swapped sequences are not paths");
  new_carrier.length = *carrier_len;
  new_donor.length = *donor_len;

  if (new_carrier.length != carrier.length || new_donor.length != donor.length) {
    invalid("window subpaths differ in length");
  }
  if (congestion_profile(inst.dag, out, CongestionMode::kVertex) !=
      congestion_profile(inst.dag, sol, CongestionMode::kVertex)) {
    throw std::logic_error("swap changed the congestion profile");
  }
  for (VertexId v : hot) {
    if (contains(carrier, v) && !contains(new_carrier, v)) {
      throw std::logic_error("swap dropped a hot vertex from the carrier");
    }
  }
  if (!contains(new_carrier, ctx.pivot)) throw std::logic_error("carrier did not gain the pivot");
  return out;
}

ConcentrateResult concentrate_congestion(const Instance& inst, const Solution& sol) {
  const std::vector<VertexId> hot = find_hot_vertices(inst, sol);
  if (hot.empty()) invalid("solution has no vertex at congestion c");
  const int ell = static_cast<int>(hot.size());
  const int k = static_cast<int>(sol.paths.size());

  for (int i = 0; i < k; ++i) {
    if (hot_on(sol.paths[static_cast<std::size_t>(i)], hot) == ell) return {sol, i, 0};
  }

  int carrier = -1;
  for (int i = 0; i < k && carrier < 0; ++i) {
    const Path& p = sol.paths[static_cast<std::size_t>(i)];
    if (contains(p, hot.front()) && contains(p, hot.back())) carrier = i;
  }
  if (carrier < 0) {
    throw Error(ErrorCode::kNoDonorFound, "no path contains both the first and last hot vertex");
  }

  ConcentrateResult result{sol, carrier, 0};
  while (true) {
    const Path& cp = result.solution.paths[static_cast<std::size_t>(carrier)];
    auto missing = std::find_if(hot.begin(), hot.end(), [&](VertexId v) { return !contains(cp, v); });
    if (missing == hot.end()) break;
    const auto rb = missing - hot.begin();
    VertexId lo = 0, hi = 0;
    for (auto r = rb - 1; r >= 0 && lo == 0; --r) {
      if (contains(cp, hot[static_cast<std::size_t>(r)])) lo = hot[static_cast<std::size_t>(r)];
    }
    for (auto r = rb + 1; r < ell && hi == 0; ++r) {
      if (contains(cp, hot[static_cast<std::size_t>(r)])) hi = hot[static_cast<std::size_t>(r)];
    }
    int donor = -1;
    for (int i = 0; i < k && donor < 0; ++i) {
      const Path& p = result.solution.paths[static_cast<std::size_t>(i)];
      if (i != carrier && contains(p, lo) && contains(p, *missing) && contains(p, hi)) donor = i;
    }
    if (donor < 0) {
      throw Error(ErrorCode::kNoDonorFound,
                  "no path passes through " + std::to_string(lo) + ", " + std::to_string(*missing) +
                      " and " + std::to_string(hi));
    }
    const int before = hot_on(cp, hot);
    result.solution = swap_subpaths(inst, result.solution,
                                    SwapContext{hot, carrier, donor, *missing, {lo, hi}});
    const int after = hot_on(result.solution.paths[static_cast<std::size_t>(carrier)], hot);
    if (after <= before) throw std::logic_error("swap made no progress on the carrier");
    if (++result.swaps > ell - 2) throw std::logic_error("more than l-2 swaps");
  }
  return result;
}

}  // namespace dspc
