#pragma once

#include <tuple>
#include <vector>

#include "mstsketch/graph.hpp"
#include "mstsketch/rng.hpp"

namespace mstsketch::testsupport {

// Connected graph on n vertices with continuous i.i.d. Uniform(0,1) weights:
// a random spanning tree backbone plus each remaining pair independently
// with probability extra_edge_prob.
inline WeightedGraph random_connected_graph(std::size_t n, RandomStream& rng,
                                            double extra_edge_prob = 0.5) {
  std::vector<std::tuple<VertexId, VertexId, double>> raw;
  std::vector<char> present(n * n, 0);
  const auto add = [&](VertexId u, VertexId v) {
    if (u > v)
      std::swap(u, v);
    if (present[u * n + v])
      return;
    present[u * n + v] = 1;
    raw.emplace_back(u, v, rng.uniform01());
  };
  for (VertexId v = 1; v < n; ++v)
    add(static_cast<VertexId>(rng.below(v)), v);
  for (VertexId u = 0; u + 1 < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.uniform01() < extra_edge_prob)
        add(u, v);
  return WeightedGraph::from_edge_list(n, raw);
}

} // namespace mstsketch::testsupport
