#include "dspc/hardness_gen.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "dspc/errors.hpp"
#include "dspc/verify.hpp"

namespace dspc {

namespace {

std::string idx(int a, int b) { return "[" + std::to_string(a) + "," + std::to_string(b) + "]"; }
std::string idx(int a, int b, int c) {
  return "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
}

// Collects edges in insertion order, dropping repeats.
class EdgeSet {
 public:
  void add(VertexId u, VertexId v, Weight w = 1) {
    if (seen_.insert({u, v}).second) edges_.push_back({u, v, w});
  }
  std::vector<Edge> take() { return std::move(edges_); }

 private:
  std::set<std::pair<VertexId, VertexId>> seen_;
  std::vector<Edge> edges_;
};

template <class T>
T& at(std::vector<T>& v, int i) {
  return v[static_cast<std::size_t>(i)];
}
template <class T>
const T& at(const std::vector<T>& v, int i) {
  return v[static_cast<std::size_t>(i)];
}

}  // namespace

bool UndirectedGraph::adjacent(int u, int v) const {
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == u && e.second == v) || (e.first == v && e.second == u);
  });
}

ColoredGraph clique_to_mcc(const UndirectedGraph& g, int k) {
  if (k < 2) throw Error(ErrorCode::kInvariantViolation, "clique size must be at least 2");
  const int n = g.vertex_count;
  auto id = [n](int v, int color) { return (color - 1) * n + v; };
  ColoredGraph out;
  out.graph.vertex_count = n * k;
  out.colors = k;
  out.color.assign(static_cast<std::size_t>(n * k) + 1, 0);
  for (int color = 1; color <= k; ++color) {
    for (int v = 1; v <= n; ++v) at(out.color, id(v, color)) = color;
  }
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        const int a = id(u, i), b = id(v, j);
        if (seen.insert(std::minmax(a, b)).second) out.graph.edges.emplace_back(a, b);
      }
    }
  }
  return out;
}

MccInstance mcc_to_planar_edsp(const ColoredGraph& cg, int k) {
  const int n = cg.graph.vertex_count;
  if (k < 1 || n < 1) throw Error(ErrorCode::kInvariantViolation, "need n >= 1 and k >= 1");
  if (cg.color.size() != static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorCode::kInvariantViolation, "coloring must cover every vertex");
  }
  std::vector<int> class_size(static_cast<std::size_t>(k) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    const int c = at(cg.color, v);
    if (c < 1 || c > k) throw Error(ErrorCode::kInvariantViolation, "color out of range");
    if (v > 1 && c < at(cg.color, v - 1)) {
      throw Error(ErrorCode::kInvariantViolation, "vertices must be sorted by color");
    }
    ++at(class_size, c);
  }
  for (int c = 1; c <= k; ++c) {
    if (at(class_size, c) == 0) {
      throw Error(ErrorCode::kColorMissing, "color " + std::to_string(c) + " has no vertex");
    }
  }
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n) + 1,
                                     std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
  for (auto [u, v] : cg.graph.edges) {
    at(at(adj, u), v) = 1;
    at(at(adj, v), u) = 1;
  }
  auto merged = [&](int i, int j) {
    if (i == j) return false;
    const bool keep_apart = at(cg.color, i) != at(cg.color, j) && at(at(adj, i), j);
    return !keep_apart;
  };

  MccLayout L;
  L.n = n;
  L.k = k;
  const auto rows = static_cast<std::size_t>(n) + 1;
  L.w_out.assign(rows, std::vector<VertexId>(rows, 0));
  L.w_in_h = L.w_out;
  L.w_in_v = L.w_out;
  std::vector<std::string> labels{""};
  std::vector<std::pair<double, double>> coords{{0, 0}};
  VertexId next = 1;
  auto alloc = [&](std::string label, double x, double y) {
    labels.push_back(std::move(label));
    coords.emplace_back(x, y);
    return next++;
  };

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) at(at(L.w_out, i), j) = alloc("wout" + idx(i, j), j, i);
  }
  int merge_count = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (merged(i, j)) {
        const VertexId w = alloc("win" + idx(i, j), j - 0.5, i - 0.5);
        at(at(L.w_in_h, i), j) = w;
        at(at(L.w_in_v, i), j) = w;
        ++merge_count;
      } else {
        at(at(L.w_in_h, i), j) = alloc("win_h" + idx(i, j), j - 0.5, i);
        at(at(L.w_in_v, i), j) = alloc("win_v" + idx(i, j), j, i - 0.5);
      }
    }
  }
  L.s_tilde_h.assign(rows, 0);
  L.t_tilde_h.assign(rows, 0);
  L.s_tilde_v.assign(rows, 0);
  L.t_tilde_v.assign(rows, 0);
  for (int i = 1; i <= n; ++i) {
    at(L.s_tilde_h, i) = alloc("s~h[" + std::to_string(i) + "]", -0.5, i);
    at(L.t_tilde_h, i) = alloc("t~h[" + std::to_string(i) + "]", n + 1, i);
    at(L.s_tilde_v, i) = alloc("s~v[" + std::to_string(i) + "]", i, -0.5);
    at(L.t_tilde_v, i) = alloc("t~v[" + std::to_string(i) + "]", i, n + 1);
  }
  const auto colors = static_cast<std::size_t>(k) + 1;
  L.s_star_h.assign(colors, 0);
  L.t_star_h.assign(colors, 0);
  L.s_star_v.assign(colors, 0);
  L.t_star_v.assign(colors, 0);
  // Color classes occupy consecutive rows; each fan attaches at the class midpoint.
  std::vector<double> mid(colors, 0);
  for (int v = 1; v <= n; ++v) at(mid, at(cg.color, v)) += static_cast<double>(v) / at(class_size, at(cg.color, v));
  for (int c = 1; c <= k; ++c) {
    const std::string tag = "[" + std::to_string(c) + "]";
    at(L.s_star_h, c) = alloc("s*h" + tag, -1.5, at(mid, c));
    at(L.t_star_h, c) = alloc("t*h" + tag, n + 2, at(mid, c));
    at(L.s_star_v, c) = alloc("s*v" + tag, at(mid, c), -1.5);
    at(L.t_star_v, c) = alloc("t*v" + tag, at(mid, c), n + 2);
  }
  const VertexId vertex_count = next - 1;

  EdgeSet edges;
  for (int i = 1; i <= n; ++i) {
    edges.add(at(L.s_tilde_h, i), at(at(L.w_in_h, i), 1));
    for (int j = 1; j <= n; ++j) {
      if (j > 1) edges.add(at(at(L.w_out, i), j - 1), at(at(L.w_in_h, i), j));
      edges.add(at(at(L.w_in_h, i), j), at(at(L.w_out, i), j));
    }
    edges.add(at(at(L.w_out, i), n), at(L.t_tilde_h, i));
  }
  for (int j = 1; j <= n; ++j) {
    edges.add(at(L.s_tilde_v, j), at(at(L.w_in_v, 1), j));
    for (int i = 1; i <= n; ++i) {
      if (i > 1) edges.add(at(at(L.w_out, i - 1), j), at(at(L.w_in_v, i), j));
      edges.add(at(at(L.w_in_v, i), j), at(at(L.w_out, i), j));
    }
    edges.add(at(at(L.w_out, n), j), at(L.t_tilde_v, j));
  }
  for (int i = 1; i <= n; ++i) {
    const int c = at(cg.color, i);
    edges.add(at(L.s_star_h, c), at(L.s_tilde_h, i));
    edges.add(at(L.s_star_v, c), at(L.s_tilde_v, i));
    edges.add(at(L.t_tilde_h, i), at(L.t_star_h, c));
    edges.add(at(L.t_tilde_v, i), at(L.t_star_v, c));
  }

  std::vector<Demand> demands;
  for (int c = 1; c <= k; ++c) demands.push_back({at(L.s_star_h, c), at(L.t_star_h, c)});
  for (int c = 1; c <= k; ++c) demands.push_back({at(L.s_star_v, c), at(L.t_star_v, c)});

  L.coordinates = std::move(coords);
  Dag dag(vertex_count, edges.take(), false, std::move(labels));

  MccReport report;
  report.n = n;
  report.k = k;
  report.merged = merge_count;
  report.vertex_count = dag.vertex_count();
  report.edge_count = dag.edge_count();
  report.formula_vertex_count = 3 * n * n - merge_count + 4 * n + 4 * k;
  report.formula_edge_count = 4 * n * n - merge_count + 6 * n;
  report.demand_distance = 2 * n + 3;
  if (report.vertex_count != report.formula_vertex_count ||
      report.edge_count != report.formula_edge_count) {
    throw std::logic_error("grid construction size does not match its formula");
  }
  return MccInstance{Instance(std::move(dag), std::move(demands), 1, CongestionMode::kEdge), cg,
                     std::move(L), report};
}

Solution expected_routing_from_witness(const MccInstance& gen, const MccWitness& witness) {
  const MccLayout& L = gen.layout;
  const ColoredGraph& cg = gen.source;
  if (static_cast<int>(witness.clique.size()) != L.k) {
    throw Error(ErrorCode::kWitnessInvalid, "witness must name one vertex per color");
  }
  for (int c = 1; c <= L.k; ++c) {
    const int v = at(witness.clique, c - 1);
    if (v < 1 || v > L.n || at(cg.color, v) != c) {
      throw Error(ErrorCode::kWitnessInvalid, "witness vertex for color " + std::to_string(c) +
                                                  " is missing or has another color");
    }
    for (int c2 = 1; c2 < c; ++c2) {
      if (!cg.graph.adjacent(v, at(witness.clique, c2 - 1))) {
        throw Error(ErrorCode::kWitnessInvalid, "witness vertices are not pairwise adjacent");
      }
    }
  }
  Solution sol;
  for (int c = 1; c <= L.k; ++c) {
    const int i = at(witness.clique, c - 1);
    std::vector<VertexId> row{at(L.s_star_h, c), at(L.s_tilde_h, i)};
    for (int j = 1; j <= L.n; ++j) {
      row.push_back(at(at(L.w_in_h, i), j));
      row.push_back(at(at(L.w_out, i), j));
    }
    row.push_back(at(L.t_tilde_h, i));
    row.push_back(at(L.t_star_h, c));
    sol.paths.push_back(make_path(gen.instance.dag, std::move(row)));
  }
  for (int c = 1; c <= L.k; ++c) {
    const int j = at(witness.clique, c - 1);
    std::vector<VertexId> col{at(L.s_star_v, c), at(L.s_tilde_v, j)};
    for (int i = 1; i <= L.n; ++i) {
      col.push_back(at(at(L.w_in_v, i), j));
      col.push_back(at(at(L.w_out, i), j));
    }
    col.push_back(at(L.t_tilde_v, j));
    col.push_back(at(L.t_star_v, c));
    sol.paths.push_back(make_path(gen.instance.dag, std::move(col)));
  }
  if (!verify_solution(gen.instance, sol).feasible) {
    throw std::logic_error("planted clique routing does not verify");
  }
  return sol;
}

std::optional<MccWitness> find_colorful_clique(const ColoredGraph& cg, int k) {
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(k) + 1);
  for (int v = 1; v <= cg.graph.vertex_count; ++v) {
    const int c = at(cg.color, v);
    if (c >= 1 && c <= k) at(classes, c).push_back(v);
  }
  MccWitness w;
  std::function<bool(int)> rec = [&](int c) {
    if (c > k) return true;
    for (int v : at(classes, c)) {
      bool ok = true;
      for (int u : w.clique) ok = ok && cg.graph.adjacent(u, v);
      if (!ok) continue;
      w.clique.push_back(v);
      if (rec(c + 1)) return true;
      w.clique.pop_back();
    }
    return false;
  };
  if (!rec(1)) return std::nullopt;
  return w;
}

PatternGraph PatternGraph::complete_bipartite_3_3() {
  PatternGraph p;
  p.vertex_count = 6;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 4; b <= 6; ++b) p.edges.emplace_back(a, b);
  }
  return p;
}

PatternGraph PatternGraph::cube() {
  // Even-parity corners of the 3-cube become u_1..u_4, odd ones u_5..u_8.
  const int even[] = {0, 3, 5, 6};
  const int odd[] = {1, 2, 4, 7};
  auto id = [&](int corner) {
    for (int i = 0; i < 4; ++i) {
      if (even[i] == corner) return i + 1;
      if (odd[i] == corner) return i + 5;
    }
    return 0;
  };
  PatternGraph p;
  p.vertex_count = 8;
  for (int corner : even) {
    for (int bit = 0; bit < 3; ++bit) p.edges.emplace_back(id(corner), id(corner ^ (1 << bit)));
  }
  std::sort(p.edges.begin(), p.edges.end());
  return p;
}

void PatternGraph::validate() const {
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::kPatternNotCubicBipartite, why);
  };
  const int h = vertex_count;
  if (h < 2 || h % 2 != 0) fail("pattern needs an even, positive vertex count");
  std::vector<int> degree(static_cast<std::size_t>(h) + 1, 0);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > h || v > h || u == v) fail("pattern edge has invalid endpoints");
    if (!seen.insert(std::minmax(u, v)).second) fail("pattern has a repeated edge");
    if ((u <= h / 2) == (v <= h / 2)) fail("pattern edge does not cross the bipartition");
    ++at(degree, u);
    ++at(degree, v);
  }
  for (int v = 1; v <= h; ++v) {
    if (at(degree, v) != 3) fail("pattern vertex " + std::to_string(v) + " is not of degree 3");
  }
}

bool HostGraph::adjacent(HostVertex a, HostVertex b) const {
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == a && e.second == b) || (e.first == b && e.second == a);
  });
}

namespace {

std::vector<VertexId> spine(const PsiLayout& L, int i, bool upper) {
  const auto& main = upper ? L.upper : L.lower;
  const auto& sub = upper ? L.upper_sub : L.lower_sub;
  const int ni = static_cast<int>(at(main, i).size()) - 1;
  std::vector<VertexId> out{at(at(main, i), 0)};
  for (int j = 1; j <= ni; ++j) {
    for (int l = 1; l <= L.k; ++l) out.push_back(at(at(at(sub, i), j), l));
    out.push_back(at(at(main, i), j));
  }
  return out;
}

}  // namespace

PsiInstance psi_to_dspc(const PatternGraph& pattern, const HostGraph& host, int c) {
  pattern.validate();
  if (c < 1) throw Error(ErrorCode::kInvariantViolation, "congestion must be >= 1");
  const int h = pattern.vertex_count;
  const int k = static_cast<int>(pattern.edges.size());
  if (static_cast<int>(host.class_sizes.size()) != h) {
    throw Error(ErrorCode::kInvariantViolation, "host needs one class per pattern vertex");
  }
  for (int size : host.class_sizes) {
    if (size < 1) throw Error(ErrorCode::kInvariantViolation, "host classes must be nonempty");
  }
  auto n_of = [&](int i) { return at(host.class_sizes, i - 1); };
  for (const auto& [a, b] : host.edges) {
    for (HostVertex x : {a, b}) {
      if (x.cls < 1 || x.cls > h || x.index < 1 || x.index > n_of(x.cls)) {
        throw Error(ErrorCode::kInvariantViolation, "host edge names an unknown vertex");
      }
    }
  }

  PsiLayout L;
  L.h = h;
  L.k = k;
  const auto blocks = static_cast<std::size_t>(h) + 1;
  L.upper.resize(blocks);
  L.lower.resize(blocks);
  L.upper_sub.resize(blocks);
  L.lower_sub.resize(blocks);
  std::vector<std::string> labels{""};
  VertexId next = 1;
  auto alloc = [&](std::string label) {
    labels.push_back(std::move(label));
    return next++;
  };
  for (int i = 1; i <= h; ++i) {
    const int ni = n_of(i);
    for (int side = 0; side < 2; ++side) {
      auto& main = side == 0 ? at(L.upper, i) : at(L.lower, i);
      auto& sub = side == 0 ? at(L.upper_sub, i) : at(L.lower_sub, i);
      const std::string tag = side == 0 ? "qU" : "qL";
      main.assign(static_cast<std::size_t>(ni) + 1, 0);
      sub.assign(static_cast<std::size_t>(ni) + 1, std::vector<VertexId>(static_cast<std::size_t>(k) + 1, 0));
      at(main, 0) = alloc(tag + idx(i, 0));
      for (int j = 1; j <= ni; ++j) {
        for (int l = 1; l <= k; ++l) at(at(sub, j), l) = alloc(tag + idx(i, j, l));
        at(main, j) = alloc(tag + idx(i, j));
      }
    }
  }
  L.link_source.assign(static_cast<std::size_t>(k) + 1, 0);
  L.link_terminal.assign(static_cast<std::size_t>(k) + 1, 0);
  for (int l = 1; l <= k; ++l) {
    at(L.link_source, l) = alloc("s[" + std::to_string(l) + "]");
    at(L.link_terminal, l) = alloc("t[" + std::to_string(l) + "]");
  }
  const VertexId vertex_count = next - 1;

  EdgeSet edges;
  for (int i = 1; i <= h; ++i) {
    for (bool upper : {true, false}) {
      const auto path = spine(L, i, upper);
      for (std::size_t p = 1; p < path.size(); ++p) edges.add(path[p - 1], path[p]);
    }
    for (int j = 1; j <= n_of(i); ++j) {
      edges.add(at(at(L.upper, i), j - 1), at(at(L.lower, i), j));
      for (int l = 1; l <= k; ++l) {
        edges.add(at(at(at(L.upper_sub, i), j), l), at(at(at(L.lower_sub, i), j), l));
      }
    }
  }
  for (int l = 1; l <= k; ++l) {
    const auto [ua, ub] = at(pattern.edges, l - 1);
    const int i1 = std::min(ua, ub), i2 = std::max(ua, ub);
    for (int j1 = 1; j1 <= n_of(i1); ++j1) {
      for (int j2 = 1; j2 <= n_of(i2); ++j2) {
        if (!host.adjacent({i1, j1}, {i2, j2})) continue;
        edges.add(at(L.link_source, l), at(at(at(L.upper_sub, i1), j1), l));
        edges.add(at(at(at(L.lower_sub, i1), j1), l), at(at(at(L.upper_sub, i2), j2), l));
        edges.add(at(at(at(L.lower_sub, i2), j2), l), at(L.link_terminal, l));
      }
    }
  }

  std::vector<Demand> demands;
  for (int i = 1; i <= h; ++i) {
    const auto& up = at(L.upper, i);
    const auto& lo = at(L.lower, i);
    for (int copy = 0; copy < c - 1; ++copy) demands.push_back({up.front(), up.back()});
    for (int copy = 0; copy < c - 1; ++copy) demands.push_back({lo.front(), lo.back()});
    demands.push_back({up.front(), lo.back()});
  }
  for (int l = 1; l <= k; ++l) demands.push_back({at(L.link_source, l), at(L.link_terminal, l)});

  PsiReport report;
  report.vertex_count = vertex_count;
  report.vertex_bound = 2 * k;
  for (int i = 1; i <= h; ++i) report.vertex_bound += 2 * (n_of(i) + 1 + k * n_of(i));
  report.demand_count = h * (2 * (c - 1) + 1) + k;
  if (report.vertex_count > report.vertex_bound ||
      static_cast<int>(demands.size()) != report.demand_count) {
    throw std::logic_error("block construction size does not match its formula");
  }
  Dag dag(vertex_count, edges.take(), false, std::move(labels));
  return PsiInstance{Instance(std::move(dag), std::move(demands), c, CongestionMode::kVertex),
                     pattern, host, std::move(L), report};
}

Solution expected_routing_from_witness(const PsiInstance& gen, const PsiWitness& witness) {
  const PsiLayout& L = gen.layout;
  const int h = L.h;
  if (static_cast<int>(witness.image.size()) != h) {
    throw Error(ErrorCode::kWitnessInvalid, "witness must map every pattern vertex");
  }
  for (int i = 1; i <= h; ++i) {
    const int j = at(witness.image, i - 1);
    if (j < 1 || j > at(gen.host.class_sizes, i - 1)) {
      throw Error(ErrorCode::kWitnessInvalid, "image of u_" + std::to_string(i) + " is out of its class");
    }
  }
  for (auto [a, b] : gen.pattern.edges) {
    if (!gen.host.adjacent({a, at(witness.image, a - 1)}, {b, at(witness.image, b - 1)})) {
      throw Error(ErrorCode::kWitnessInvalid, "witness does not preserve a pattern edge");
    }
  }
  const Dag& dag = gen.instance.dag;
  const int c = gen.instance.congestion;
  Solution sol;
  for (int i = 1; i <= h; ++i) {
    const auto upper = spine(L, i, true);
    const auto lower = spine(L, i, false);
    for (int copy = 0; copy < c - 1; ++copy) sol.paths.push_back(make_path(dag, upper));
    for (int copy = 0; copy < c - 1; ++copy) sol.paths.push_back(make_path(dag, lower));
    const int j = at(witness.image, i - 1);
    const VertexId leave = at(at(L.upper, i), j - 1);
    const VertexId enter = at(at(L.lower, i), j);
    std::vector<VertexId> cross(upper.begin(), std::find(upper.begin(), upper.end(), leave) + 1);
    cross.insert(cross.end(), std::find(lower.begin(), lower.end(), enter), lower.end());
    sol.paths.push_back(make_path(dag, std::move(cross)));
  }
  for (int l = 1; l <= L.k; ++l) {
    const auto [ua, ub] = at(gen.pattern.edges, l - 1);
    const int i1 = std::min(ua, ub), i2 = std::max(ua, ub);
    const int j1 = at(witness.image, i1 - 1), j2 = at(witness.image, i2 - 1);
    sol.paths.push_back(make_path(
        dag, {at(L.link_source, l), at(at(at(L.upper_sub, i1), j1), l),
              at(at(at(L.lower_sub, i1), j1), l), at(at(at(L.upper_sub, i2), j2), l),
              at(at(at(L.lower_sub, i2), j2), l), at(L.link_terminal, l)}));
  }
  if (!verify_solution(gen.instance, sol).feasible) {
    throw std::logic_error("planted homomorphism routing does not verify");
  }
  return sol;
}

std::optional<PsiWitness> find_partitioned_homomorphism(const PatternGraph& pattern,
                                                        const HostGraph& host) {
  const int h = pattern.vertex_count;
  PsiWitness w;
  w.image.assign(static_cast<std::size_t>(h), 0);
  std::function<bool(int)> rec = [&](int i) {
    if (i > h) return true;
    for (int j = 1; j <= at(host.class_sizes, i - 1); ++j) {
      at(w.image, i - 1) = j;
      bool ok = true;
      for (auto [a, b] : pattern.edges) {
        const int other = a == i ? b : (b == i ? a : 0);
        if (other == 0 || other > i) continue;
        ok = ok && host.adjacent({i, j}, {other, at(w.image, other - 1)});
      }
      if (ok && rec(i + 1)) return true;
    }
    at(w.image, i - 1) = 0;
    return false;
  };
  if (!rec(1)) return std::nullopt;
  return w;
}

}  // namespace dspc
