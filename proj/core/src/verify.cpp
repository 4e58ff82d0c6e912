#include "dspc/verify.hpp"

#include <algorithm>
#include <string>

#include "dspc/errors.hpp"

namespace dspc {

int CongestionProfile::max() const {
  return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

CongestionProfile congestion_profile(const Dag& dag, const Solution& sol, CongestionMode mode) {
  CongestionProfile profile{mode, {}};
  if (mode == CongestionMode::kVertex) {
    profile.count.assign(static_cast<std::size_t>(dag.vertex_count()) + 1, 0);
    for (const Path& p : sol.paths) {
      for (VertexId v : p.vertices) {
        if (dag.valid_vertex(v)) ++profile.count[static_cast<std::size_t>(v)];
      }
    }
  } else {
    profile.count.assign(static_cast<std::size_t>(dag.edge_count()), 0);
    for (const Path& p : sol.paths) {
      for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        if (auto e = dag.find_edge(p.vertices[i - 1], p.vertices[i])) {
          ++profile.count[static_cast<std::size_t>(*e)];
        }
      }
    }
  }
  return profile;
}

CongestionProfile congestion_profile(const Instance& inst, const Solution& sol) {
  return congestion_profile(inst.dag, sol, inst.mode);
}

std::string Violation::describe() const {
  const std::string where = "path " + std::to_string(path_index + 1);
  switch (kind) {
    case ViolationKind::kBrokenPath: return where + ": not a path of the graph";
    case ViolationKind::kLengthMismatch: return where + ": stated length differs from weight sum";
    case ViolationKind::kWrongEndpoints: return where + ": wrong endpoints";
    case ViolationKind::kNotShortest: return where + ": not a shortest path";
    case ViolationKind::kVertexCongestion:
      return "vertex " + std::to_string(vertex) + " carries " + std::to_string(count) + " paths";
    case ViolationKind::kEdgeCongestion:
      return "edge (" + std::to_string(vertex) + "," + std::to_string(head) + ") carries " +
             std::to_string(count) + " paths";
  }
  return "unknown violation";
}

VerifyReport verify_solution(const Instance& inst, const Solution& sol, const DistanceMatrix& dm) {
  if (static_cast<int>(sol.paths.size()) != inst.k()) {
    throw Error(ErrorCode::kShapeMismatch, "solution has " + std::to_string(sol.paths.size()) +
                                               " paths for " + std::to_string(inst.k()) + " demands");
  }
  VerifyReport report;
  for (int i = 0; i < inst.k(); ++i) {
    const Path& p = sol.paths[static_cast<std::size_t>(i)];
    const Demand& d = inst.demands[static_cast<std::size_t>(i)];
    const auto weight = path_weight(inst.dag, p.vertices);
    if (!weight) {
      report.violations.push_back({ViolationKind::kBrokenPath, i});
      continue;
    }
    if (p.vertices.front() != d.source || p.vertices.back() != d.terminal) {
      report.violations.push_back({ViolationKind::kWrongEndpoints, i});
    }
    if (*weight != p.length) report.violations.push_back({ViolationKind::kLengthMismatch, i});
    if (*weight != dm.dist(p.vertices.front(), p.vertices.back())) {
      report.violations.push_back({ViolationKind::kNotShortest, i});
    }
  }
  const CongestionProfile profile = congestion_profile(inst, sol);
  for (std::size_t x = 0; x < profile.count.size(); ++x) {
    const int count = profile.count[x];
    if (count <= inst.congestion) continue;
    if (inst.mode == CongestionMode::kVertex) {
      report.violations.push_back(
          {ViolationKind::kVertexCongestion, -1, static_cast<VertexId>(x), 0, count});
    } else {
      const Edge& e = inst.dag.edge(static_cast<EdgeIndex>(x));
      report.violations.push_back({ViolationKind::kEdgeCongestion, -1, e.tail, e.head, count});
    }
  }
  report.feasible = report.violations.empty();
  return report;
}

VerifyReport verify_solution(const Instance& inst, const Solution& sol) {
  return verify_solution(inst, sol, DistanceMatrix(inst.dag));
}

}  // namespace dspc
