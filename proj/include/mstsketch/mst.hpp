#pragma once

#include <cstddef>
#include <vector>

#include "mstsketch/cost.hpp"
#include "mstsketch/graph.hpp"

namespace mstsketch {

// Union-find with path halving and union by rank.
class DisjointSetForest {
public:
  explicit DisjointSetForest(std::size_t n);

  std::size_t find(std::size_t x);
  // Merges the components of a and b; returns false if already joined.
  bool unite(std::size_t a, std::size_t b);
  std::size_t component_count() const { return component_count_; }

private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t component_count_;
};

// A spanning tree referencing edges of its host graph by index. Indices are
// kept sorted and total_weight is the sum of the selected weights in index
// order, so equal edge sets always produce bit-identical totals regardless
// of which solver found them.
struct SpanningTree {
  std::vector<std::size_t> edge_indices;
  double total_weight = 0.0;
};

// Kruskal's algorithm; ties broken by ascending edge index. Suited to sparse
// edge lists. Throws on disconnected input.
SpanningTree kruskal(const WeightedGraph& g);

// Prim's algorithm with an n-length best-distance array (quadratic work, no
// heap), the natural solver for complete graphs. Throws on disconnected
// input.
SpanningTree prim_dense(const WeightedGraph& g);

struct PhiMstResult {
  SpanningTree tree;
  double cost = 0.0;
};

// Exhaustive phi-cost minimum over all spanning trees; ground truth for any
// CostSpec. Capped at n <= 8. coloring may be null when spec.phi2 is zero.
PhiMstResult brute_force_mst(const WeightedGraph& g, const CostSpec& spec,
                             const VertexColoring* coloring = nullptr);

// Minimum phi-cost spanning tree. With phi2 == 0 and the strictly increasing
// phi1 catalog this coincides with the ordinary MST, so the linear solver
// runs and phi1 is applied to its total weight. With phi2 != 0 the problem
// is solved exhaustively for n <= 8 and refused beyond that.
PhiMstResult phi_mst(const WeightedGraph& g, const CostSpec& spec,
                     const VertexColoring* coloring = nullptr);

} // namespace mstsketch
