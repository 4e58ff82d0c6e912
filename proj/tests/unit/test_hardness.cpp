#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "dspc/distances.hpp"
#include "dspc/dsp_exact.hpp"
#include "dspc/edge_disjoint.hpp"
#include "dspc/errors.hpp"
#include "dspc/hardness_gen.hpp"
#include "dspc/random_instance.hpp"
#include "dspc/verify.hpp"

using namespace dspc;

namespace {

// Independent colorful clique search: backtrack over colors.
bool has_colorful_clique(const ColoredGraph& cg, int k) {
  std::vector<int> pick;
  std::function<bool(int)> go = [&](int color) {
    if (color > k) return true;
    for (int v = 1; v <= cg.graph.vertex_count; ++v) {
      if (cg.color[static_cast<std::size_t>(v)] != color) continue;
      bool ok = true;
      for (int u : pick) ok = ok && cg.graph.adjacent(u, v);
      if (!ok) continue;
      pick.push_back(v);
      if (go(color + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return go(1);
}

UndirectedGraph triangle() { return {3, {{1, 2}, {2, 3}, {1, 3}}}; }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kParseError;
}

HostGraph complete_host(const PatternGraph& p) {
  HostGraph host;
  host.class_sizes.assign(static_cast<std::size_t>(p.vertex_count), 1);
  for (auto [a, b] : p.edges) host.edges.push_back({{a, 1}, {b, 1}});
  return host;
}

}  // namespace

TEST(CliqueToMcc, Examples) {
  const ColoredGraph one = clique_to_mcc({2, {{1, 2}}}, 2);
  EXPECT_EQ(one.graph.vertex_count, 4);
  EXPECT_TRUE(has_colorful_clique(one, 2));
  EXPECT_TRUE(find_colorful_clique(one, 2));

  EXPECT_TRUE(has_colorful_clique(clique_to_mcc(triangle(), 3), 3));
  EXPECT_TRUE(find_colorful_clique(clique_to_mcc(triangle(), 3), 3));
  EXPECT_FALSE(has_colorful_clique(clique_to_mcc(triangle(), 4), 4));
  EXPECT_FALSE(find_colorful_clique(clique_to_mcc(triangle(), 4), 4));

  for (int k = 2; k <= 4; ++k) {
    const ColoredGraph none = clique_to_mcc({4, {}}, k);
    EXPECT_FALSE(find_colorful_clique(none, k));
    EXPECT_TRUE(none.graph.edges.empty());
  }
}

TEST(CliqueToMcc, OutputIsSortedByColor) {
  const ColoredGraph cg = clique_to_mcc(triangle(), 3);
  EXPECT_TRUE(std::is_sorted(cg.color.begin() + 1, cg.color.end()));
  EXPECT_NO_THROW(mcc_to_planar_edsp(cg, 3));
}

TEST(FindColorfulClique, MatchesIndependentSearch) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomColoredParams p;
    p.vertex_count = 3 + static_cast<int>(seed % 4);
    p.colors = 2 + static_cast<int>(seed % 2);
    p.edge_percent = 30;
    const ColoredGraph cg = random_colored_graph(p, seed);
    const auto w = find_colorful_clique(cg, p.colors);
    ASSERT_EQ(w.has_value(), has_colorful_clique(cg, p.colors));
  }
}

TEST(MccGrid, Errors) {
  ColoredGraph cg;
  cg.graph.vertex_count = 2;
  cg.color = {0, 1, 1};
  cg.colors = 2;
  EXPECT_EQ(code_of([&] { mcc_to_planar_edsp(cg, 2); }), ErrorCode::kColorMissing);
  cg.color = {0, 2, 1};
  EXPECT_EQ(code_of([&] { mcc_to_planar_edsp(cg, 2); }), ErrorCode::kInvariantViolation);
}

TEST(MccGrid, StructureOnSeededGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    RandomColoredParams p;
    p.vertex_count = 2 + static_cast<int>(seed % 4);
    p.colors = 2;
    p.plant_clique = seed % 3 == 0;
    const ColoredGraph cg = random_colored_graph(p, seed);
    const MccInstance gen = mcc_to_planar_edsp(cg, 2);
    const int n = p.vertex_count, k = 2;
    const MccLayout& L = gen.layout;
    EXPECT_EQ(gen.instance.dag.vertex_count(), 3 * n * n - gen.report.merged + 4 * n + 4 * k);
    EXPECT_EQ(gen.instance.dag.edge_count(), 4 * n * n - gen.report.merged + 6 * n);
    EXPECT_LE(gen.instance.dag.vertex_count(), 3 * n * n + 4 * n + 4 * k);
    EXPECT_EQ(gen.instance.k(), 2 * k);
    EXPECT_EQ(gen.instance.mode, CongestionMode::kEdge);
    EXPECT_EQ(gen.instance.congestion, 1);
    for (const Edge& e : gen.instance.dag.edges()) EXPECT_EQ(e.weight, 1);

    const DistanceMatrix dm(gen.instance.dag);
    for (const Demand& d : gen.instance.demands) EXPECT_EQ(dm.dist(d.source, d.terminal), 2 * n + 3);

    // In-vertices merge exactly for i != j unless the two vertices differ in
    // color and are adjacent; merged cells are where row and column share an edge.
    int merged = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const bool apart = i == j || (cg.color[static_cast<std::size_t>(i)] != cg.color[static_cast<std::size_t>(j)] &&
                                      cg.graph.adjacent(i, j));
        const VertexId h = L.w_in_h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        const VertexId v = L.w_in_v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        EXPECT_EQ(h == v, !apart);
        merged += h == v;
      }
    }
    EXPECT_EQ(merged, gen.report.merged);

    // Row i and column j share an edge exactly at a merged cell.
    std::set<std::pair<VertexId, VertexId>> row_edges;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        std::set<std::pair<VertexId, VertexId>> row, col;
        std::vector<VertexId> rv{L.s_tilde_h[static_cast<std::size_t>(i)]}, cv{L.s_tilde_v[static_cast<std::size_t>(j)]};
        for (int x = 1; x <= n; ++x) {
          rv.push_back(L.w_in_h[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)]);
          rv.push_back(L.w_out[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)]);
          cv.push_back(L.w_in_v[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)]);
          cv.push_back(L.w_out[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)]);
        }
        for (std::size_t a = 0; a + 1 < rv.size(); ++a) row.insert({rv[a], rv[a + 1]});
        for (std::size_t a = 0; a + 1 < cv.size(); ++a) col.insert({cv[a], cv[a + 1]});
        const bool share = std::any_of(row.begin(), row.end(), [&](const auto& e) { return col.count(e) > 0; });
        EXPECT_EQ(share, L.w_in_h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                             L.w_in_v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
    }
    EXPECT_EQ(L.coordinates.size(), static_cast<std::size_t>(gen.instance.dag.vertex_count()) + 1);
  }
}

TEST(MccGrid, PlantedWitnessRoutes) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RandomColoredParams p;
    p.vertex_count = 3 + static_cast<int>(seed % 3);
    p.colors = 2 + static_cast<int>(seed % 2);
    p.plant_clique = true;
    const ColoredGraph cg = random_colored_graph(p, seed);
    const auto w = find_colorful_clique(cg, p.colors);
    ASSERT_TRUE(w);
    const MccInstance gen = mcc_to_planar_edsp(cg, p.colors);
    const Solution sol = expected_routing_from_witness(gen, *w);
    EXPECT_TRUE(verify_solution(gen.instance, sol).feasible);
  }
}

TEST(MccGrid, CorruptedWitness) {
  const ColoredGraph cg = clique_to_mcc({2, {{1, 2}}}, 2);
  const MccInstance gen = mcc_to_planar_edsp(cg, 2);
  EXPECT_EQ(code_of([&] { expected_routing_from_witness(gen, MccWitness{{1, 3}}); }), ErrorCode::kWitnessInvalid);
  EXPECT_EQ(code_of([&] { expected_routing_from_witness(gen, MccWitness{{3, 2}}); }), ErrorCode::kWitnessInvalid);
  EXPECT_EQ(code_of([&] { expected_routing_from_witness(gen, MccWitness{{1}}); }), ErrorCode::kWitnessInvalid);
  EXPECT_NO_THROW(expected_routing_from_witness(gen, MccWitness{{1, 4}}));
}

TEST(MccGrid, TinyInstancesMatchCliqueExistence) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomColoredParams p;
    p.vertex_count = 2 + static_cast<int>(seed % 3);
    p.colors = 2;
    const ColoredGraph cg = random_colored_graph(p, seed);
    const MccInstance gen = mcc_to_planar_edsp(cg, 2);
    ASSERT_EQ(solve_edsp(gen.instance).has_value(), has_colorful_clique(cg, 2)) << "seed " << seed;
  }
}

TEST(Pattern, Validation) {
  EXPECT_NO_THROW(PatternGraph::complete_bipartite_3_3().validate());
  EXPECT_NO_THROW(PatternGraph::cube().validate());
  EXPECT_EQ(PatternGraph::complete_bipartite_3_3().edges.size(), 9u);
  EXPECT_EQ(PatternGraph::cube().edges.size(), 12u);
  const PatternGraph bad{4, {{1, 3}, {2, 4}}};
  EXPECT_EQ(code_of([&] { bad.validate(); }), ErrorCode::kPatternNotCubicBipartite);
  const HostGraph host{{1, 1, 1, 1}, {}};
  EXPECT_EQ(code_of([&] { psi_to_dspc(bad, host, 2); }), ErrorCode::kPatternNotCubicBipartite);
}

TEST(PsiBlocks, K33Structure) {
  const PatternGraph k33 = PatternGraph::complete_bipartite_3_3();
  const PsiInstance gen = psi_to_dspc(k33, complete_host(k33), 2);
  const Instance& inst = gen.instance;
  EXPECT_EQ(inst.k(), 27);
  EXPECT_EQ(gen.report.demand_count, 6 * (2 * (2 - 1) + 1) + 9);
  EXPECT_EQ(inst.congestion, 2);
  EXPECT_EQ(inst.mode, CongestionMode::kVertex);
  EXPECT_LE(gen.report.vertex_count, gen.report.vertex_bound);
  EXPECT_EQ(inst.dag.vertex_count(), gen.report.vertex_count);

  const DistanceMatrix dm(inst.dag);
  for (int l = 1; l <= 9; ++l) {
    EXPECT_EQ(dm.dist(gen.layout.link_source[static_cast<std::size_t>(l)], gen.layout.link_terminal[static_cast<std::size_t>(l)]), 5);
  }
  // Per block: one upper and one lower blocking copy, then the cross demand.
  for (int i = 1; i <= 6; ++i) {
    const auto& up = gen.layout.upper[static_cast<std::size_t>(i)];
    const auto& lo = gen.layout.lower[static_cast<std::size_t>(i)];
    const std::size_t base = static_cast<std::size_t>(3 * (i - 1));
    EXPECT_EQ(inst.demands[base], (Demand{up.front(), up.back()}));
    EXPECT_EQ(inst.demands[base + 1], (Demand{lo.front(), lo.back()}));
    EXPECT_EQ(inst.demands[base + 2], (Demand{up.front(), lo.back()}));
    EXPECT_EQ(count_shortest_paths(inst.dag, dm, up.front(), up.back(), 10), 1);
    EXPECT_EQ(count_shortest_paths(inst.dag, dm, lo.front(), lo.back(), 10), 1);
  }
  EXPECT_EQ(topo_order(inst.dag).size(), static_cast<std::size_t>(inst.dag.vertex_count()));
}

TEST(PsiBlocks, DemandCountFormula) {
  for (int c = 1; c <= 3; ++c) {
    for (const PatternGraph& p : {PatternGraph::complete_bipartite_3_3(), PatternGraph::cube()}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const HostGraph host = random_host_graph(p, {2, 50, true}, seed);
        const PsiInstance gen = psi_to_dspc(p, host, c);
        const int h = p.vertex_count, k = static_cast<int>(p.edges.size());
        EXPECT_EQ(gen.instance.k(), h * (2 * (c - 1) + 1) + k);
        EXPECT_LE(gen.instance.dag.vertex_count(), gen.report.vertex_bound);
      }
    }
  }
}

TEST(PsiBlocks, WitnessRoutingAndCorruption) {
  const PatternGraph k33 = PatternGraph::complete_bipartite_3_3();
  const PsiInstance gen = psi_to_dspc(k33, complete_host(k33), 2);
  const Solution sol = expected_routing_from_witness(gen, PsiWitness{{1, 1, 1, 1, 1, 1}});
  EXPECT_TRUE(verify_solution(gen.instance, sol).feasible);
  EXPECT_EQ(code_of([&] { expected_routing_from_witness(gen, PsiWitness{{1, 1, 2, 1, 1, 1}}); }),
            ErrorCode::kWitnessInvalid);
  EXPECT_EQ(code_of([&] { expected_routing_from_witness(gen, PsiWitness{{1, 1}}); }), ErrorCode::kWitnessInvalid);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const HostGraph host = random_host_graph(k33, {2, 40, true}, seed);
    const auto w = find_partitioned_homomorphism(k33, host);
    ASSERT_TRUE(w);
    const PsiInstance g2 = psi_to_dspc(k33, host, 2);
    EXPECT_TRUE(verify_solution(g2.instance, expected_routing_from_witness(g2, *w)).feasible);
  }
}

TEST(PsiBlocks, TinyInstancesMatchHomomorphismExistence) {
  // c = 1 on K_{3,3} with singleton classes: the instance routes exactly when
  // every pattern edge is present in the host.
  const PatternGraph k33 = PatternGraph::complete_bipartite_3_3();
  for (int drop = -1; drop < 9; ++drop) {
    HostGraph host = complete_host(k33);
    if (drop >= 0) host.edges.erase(host.edges.begin() + drop);
    const PsiInstance gen = psi_to_dspc(k33, host, 1);
    const bool expect = find_partitioned_homomorphism(k33, host).has_value();
    EXPECT_EQ(expect, drop < 0);
    EXPECT_EQ(brute_force_oracle(gen.instance, OracleOptions{100'000'000}).has_value(), expect);
  }
}

TEST(PsiBlocks, SeededInstancesMatchHomomorphismExistence) {
  int yes = 0, no = 0;
  for (const PatternGraph& pattern : {PatternGraph::complete_bipartite_3_3(), PatternGraph::cube()}) {
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
      const int c = 1 + static_cast<int>(seed % 2);
      const HostGraph host = random_host_graph(pattern, {1 + static_cast<int>(seed % 3 == 0), 60, seed % 4 == 0}, seed);
      const PsiInstance gen = psi_to_dspc(pattern, host, c);
      const bool expect = find_partitioned_homomorphism(pattern, host).has_value();
      const auto sol = brute_force_oracle(gen.instance, OracleOptions{100'000'000});
      ASSERT_EQ(sol.has_value(), expect) << "seed " << seed << " c " << c;
      if (sol) EXPECT_TRUE(verify_solution(gen.instance, *sol).feasible);
      (expect ? yes : no) += 1;
    }
  }
  EXPECT_GT(yes, 0);
  EXPECT_GT(no, 0);
}
