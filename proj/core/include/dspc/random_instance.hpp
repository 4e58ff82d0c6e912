#pragma once

#include <cstdint>
#include <random>

#include "dspc/graph.hpp"
#include "dspc/hardness_gen.hpp"

namespace dspc {

/// Seeded source of small integers. Draws are derived from mt19937_64 output
/// only, so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }
  // True with probability num/den.
  bool chance(int num, int den) { return uniform(1, den) <= num; }

 private:
  std::mt19937_64 engine_;
};

struct RandomDagParams {
  int vertex_count = 8;
  int demand_count = 2;
  int congestion = 1;
  int max_weight = 2;
  int edge_percent = 40;  // chance per forward pair
  CongestionMode mode = CongestionMode::kVertex;
  // Demands are drawn among reachable pairs when possible.
  bool prefer_reachable = true;
};

/// Random Dag on a random vertex permutation; edges only go forward in the
/// hidden order.
Instance random_instance(const RandomDagParams& params, std::uint64_t seed);

struct RandomColoredParams {
  int vertex_count = 5;
  int colors = 2;
  int edge_percent = 40;
  bool plant_clique = false;
};

/// Every color class nonempty; vertices sorted by color.
ColoredGraph random_colored_graph(const RandomColoredParams& params, std::uint64_t seed);

struct RandomHostParams {
  int class_size = 1;
  int edge_percent = 50;
  bool plant_homomorphism = true;
};

HostGraph random_host_graph(const PatternGraph& pattern, const RandomHostParams& params,
                            std::uint64_t seed);

}  // namespace dspc
