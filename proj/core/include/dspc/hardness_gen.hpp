#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dspc/graph.hpp"

namespace dspc {

/// Simple undirected graph on vertices 1..n.
struct UndirectedGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  bool adjacent(int u, int v) const;
};

// ---------------------------------------------------------------------------
// Multi-colored clique -> planar edge-disjoint shortest paths
// ---------------------------------------------------------------------------

struct ColoredGraph {
  UndirectedGraph graph;
  std::vector<int> color;  // color[v] in 1..colors for v = 1..n; color[0] unused
  int colors = 0;
};

/// Each vertex v of g spawns v_1..v_k with color i; {u_i, v_j} is an edge for
/// every i, j whenever {u, v} is an edge of g. Copies are numbered
/// color-major, so the output is sorted by color.
ColoredGraph clique_to_mcc(const UndirectedGraph& g, int k);

/// clique[l-1] is the vertex of color l.
struct MccWitness {
  std::vector<int> clique;
};

/// Vertex ids of the generated grid. Grid indices are 1-based; row/column
/// i corresponds to vertex v_i of the colored graph.
struct MccLayout {
  int n = 0;
  int k = 0;
  std::vector<std::vector<VertexId>> w_out;   // [i][j]
  std::vector<std::vector<VertexId>> w_in_h;  // [i][j]: in-vertex before w_out[i][j] along row i
  std::vector<std::vector<VertexId>> w_in_v;  // [i][j]: in-vertex before w_out[i][j] along column j
  std::vector<VertexId> s_tilde_h, t_tilde_h, s_tilde_v, t_tilde_v;  // [i]
  std::vector<VertexId> s_star_h, t_star_h, s_star_v, t_star_v;      // [l]
  // Planar embedding: grid coordinates (x = column, y = row, halves for
  // in-vertices) recorded per vertex id.
  std::vector<std::pair<double, double>> coordinates;
};

struct MccReport {
  int n = 0;
  int k = 0;
  int merged = 0;  // number of (i, j) with merged in-vertices
  VertexId vertex_count = 0;
  EdgeIndex edge_count = 0;
  VertexId formula_vertex_count = 0;  // 3n^2 - merged + 4n + 4k
  EdgeIndex formula_edge_count = 0;   // 4n^2 - merged + 6n
  Weight demand_distance = 0;         // 2n + 3
};

struct MccInstance {
  Instance instance;
  ColoredGraph source;
  MccLayout layout;
  MccReport report;
};

/// Grid construction. Demands: (s^h_l, t^h_l) for l = 1..k, then
/// (s^v_l, t^v_l); edge mode, c = 1, unit weights. Throws Error(kColorMissing)
/// when a color class is empty and Error(kInvariantViolation) when vertices
/// are not sorted by color.
MccInstance mcc_to_planar_edsp(const ColoredGraph& cg, int k);

Solution expected_routing_from_witness(const MccInstance& gen, const MccWitness& witness);

/// Brute force over one vertex per color class.
std::optional<MccWitness> find_colorful_clique(const ColoredGraph& cg, int k);

// ---------------------------------------------------------------------------
// Partitioned subgraph isomorphism -> (k, c)-DSP
// ---------------------------------------------------------------------------

/// Pattern on u_1..u_h with ordered edges e_1..e_k. A = {u_1..u_{h/2}}.
struct PatternGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  static PatternGraph complete_bipartite_3_3();
  static PatternGraph cube();
  /// Throws Error(kPatternNotCubicBipartite).
  void validate() const;
};

struct HostVertex {
  int cls = 0;    // 1..h
  int index = 0;  // 1..n_cls
  friend bool operator==(const HostVertex&, const HostVertex&) = default;
};

struct HostGraph {
  std::vector<int> class_sizes;  // n_1..n_h
  std::vector<std::pair<HostVertex, HostVertex>> edges;

  bool adjacent(HostVertex a, HostVertex b) const;
};

/// image[i-1] = j means u_i maps to v_{i,j}.
struct PsiWitness {
  std::vector<int> image;
};

struct PsiLayout {
  int h = 0;
  int k = 0;
  // [i][j] for j = 0..n_i
  std::vector<std::vector<VertexId>> upper, lower;
  // [i][j][l] for j = 1..n_i, l = 1..k (index 0 unused in both)
  std::vector<std::vector<std::vector<VertexId>>> upper_sub, lower_sub;
  std::vector<VertexId> link_source, link_terminal;  // [l]
};

struct PsiReport {
  VertexId vertex_count = 0;
  VertexId vertex_bound = 0;  // sum_i 2(n_i + 1 + k n_i) + 2k
  int demand_count = 0;       // h(2(c-1)+1) + k
};

struct PsiInstance {
  Instance instance;
  PatternGraph pattern;
  HostGraph host;
  PsiLayout layout;
  PsiReport report;
};

/// Block construction with unit weights. Demand order per block i: c-1 upper
/// blocking copies, c-1 lower blocking copies, the cross demand; then one
/// linking demand per pattern edge.
PsiInstance psi_to_dspc(const PatternGraph& pattern, const HostGraph& host, int c);

Solution expected_routing_from_witness(const PsiInstance& gen, const PsiWitness& witness);

/// Brute force over all images.
std::optional<PsiWitness> find_partitioned_homomorphism(const PatternGraph& pattern,
                                                        const HostGraph& host);

}  // namespace dspc
