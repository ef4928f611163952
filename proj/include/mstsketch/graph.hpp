#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace mstsketch {

using VertexId = std::uint32_t;

// Canonical undirected edge: u < v, weight >= 0.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 0.0;
};

// An i.i.d. coloring of the vertices with values in 1..k.
struct VertexColoring {
  std::vector<std::uint32_t> colors;
  std::uint32_t k = 1;

  VertexColoring() = default;
  VertexColoring(std::vector<std::uint32_t> colors_in, std::uint32_t k_in);

  std::size_t size() const { return colors.size(); }
};

// An undirected graph with nonnegative edge weights. Immutable once built.
//
// Two storage layouts share one interface: graphs generated as complete
// store only the weight array in lexicographic (u-major) edge order, which
// halves memory and gives O(1) weight lookup for the dense Prim solver;
// everything else keeps an explicit canonical edge list.
class WeightedGraph {
public:
  // Complete graph on n >= 2 vertices, each weight drawn from draw_weight.
  static WeightedGraph complete(std::size_t n,
                                const std::function<double()>& draw_weight);

  // Builds a graph from raw (u, v, weight) triples: canonicalizes
  // orientation, rejects self-loops, duplicates, out-of-range endpoints and
  // negative weights. completeness is derived from the edge count.
  static WeightedGraph
  from_edge_list(std::size_t n,
                 const std::vector<std::tuple<VertexId, VertexId, double>>& raw_edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const {
    return dense_ ? weights_.size() : edges_.size();
  }
  bool is_complete() const { return complete_; }
  bool has_dense_layout() const { return dense_; }

  Edge edge(std::size_t index) const;
  double edge_weight(std::size_t index) const {
    return dense_ ? weights_[index] : edges_[index].weight;
  }

  // Dense layout only: weight of the edge {u, v}, u != v.
  double weight_between(VertexId u, VertexId v) const {
    return weights_[pair_index(u, v)];
  }

  // Lexicographic index of the pair {u, v} in a complete graph.
  std::size_t pair_index(VertexId u, VertexId v) const;

  bool is_connected() const;

  template <typename F> void for_each_edge(F&& fn) const {
    if (dense_) {
      std::size_t idx = 0;
      for (VertexId u = 0; u + 1 < n_; ++u)
        for (VertexId v = u + 1; v < n_; ++v, ++idx)
          fn(idx, Edge{u, v, weights_[idx]});
    } else {
      for (std::size_t i = 0; i < edges_.size(); ++i)
        fn(i, edges_[i]);
    }
  }

private:
  WeightedGraph() = default;

  std::size_t n_ = 0;
  bool complete_ = false;
  bool dense_ = false;
  std::vector<Edge> edges_;     // general layout
  std::vector<double> weights_; // dense layout, lexicographic order
};

// Plain-text edge list: header line `n <count>`, then `u v weight` per line;
// `#` starts a comment line.
WeightedGraph read_edge_list(std::istream& in);
WeightedGraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const WeightedGraph& g);
void write_edge_list_file(const std::string& path, const WeightedGraph& g);

} // namespace mstsketch
