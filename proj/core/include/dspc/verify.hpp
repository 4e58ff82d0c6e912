#pragma once

#include <string>
#include <vector>

#include "dspc/distances.hpp"
#include "dspc/graph.hpp"

namespace dspc {

/// Per-vertex (vertex mode) or per-edge (edge mode) path counts. Every
/// occurrence of a vertex or edge in a path counts.
struct CongestionProfile {
  CongestionMode mode = CongestionMode::kVertex;
  // Indexed by vertex id (slot 0 unused) in vertex mode, by edge index in
  // edge mode.
  std::vector<int> count;

  int max() const;
  friend bool operator==(const CongestionProfile&, const CongestionProfile&) = default;
};

CongestionProfile congestion_profile(const Instance& inst, const Solution& sol);
CongestionProfile congestion_profile(const Dag& dag, const Solution& sol, CongestionMode mode);

enum class ViolationKind {
  kBrokenPath,       // a hop is not an edge, or the path is empty
  kLengthMismatch,   // stated length differs from the weight sum
  kWrongEndpoints,   // path does not connect s_i to t_i
  kNotShortest,
  kVertexCongestion,
  kEdgeCongestion,
};

struct Violation {
  ViolationKind kind;
  int path_index = -1;  // -1 for congestion violations
  VertexId vertex = 0;  // offending vertex (or edge tail)
  VertexId head = 0;    // edge head for kEdgeCongestion
  int count = 0;        // observed congestion
  std::string describe() const;
};

struct VerifyReport {
  bool feasible = false;
  std::vector<Violation> violations;
};

/// Checks endpoints, structural validity, shortest-ness and congestion.
/// Throws Error(kShapeMismatch) when the path count differs from k.
VerifyReport verify_solution(const Instance& inst, const Solution& sol);
VerifyReport verify_solution(const Instance& inst, const Solution& sol, const DistanceMatrix& dm);

}  // namespace dspc
