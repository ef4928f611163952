#include "mstsketch/mst.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "mstsketch/errors.hpp"

namespace mstsketch {

namespace {

constexpr std::size_t kBruteForceVertexCap = 8;
// Dense matrices for edge-list graphs are only built at small n; larger
// sparse inputs belong to kruskal.
constexpr std::size_t kDenseMatrixVertexCap = 4096;

// Sorts the index list and recomputes the total in index order, making the
// reported weight canonical for the selected edge set.
SpanningTree finalize_tree(const WeightedGraph& g,
                           std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  double total = 0.0;
  for (std::size_t i : indices)
    total += g.edge_weight(i);
  return SpanningTree{std::move(indices), total};
}

[[noreturn]] void throw_disconnected(const WeightedGraph& g) {
  throw ValidationError("graph on " + std::to_string(g.vertex_count()) +
                        " vertices is disconnected: no spanning tree exists");
}

} // namespace

DisjointSetForest::DisjointSetForest(std::size_t n)
    : parent_(n), rank_(n, 0), component_count_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSetForest::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]]; // path halving
    x = parent_[x];
  }
  return x;
}

bool DisjointSetForest::unite(std::size_t a, std::size_t b) {
  std::size_t ra = find(a), rb = find(b);
  if (ra == rb)
    return false;
  if (rank_[ra] < rank_[rb])
    std::swap(ra, rb);
  parent_[rb] = ra;
  if (rank_[ra] == rank_[rb])
    ++rank_[ra];
  --component_count_;
  return true;
}

SpanningTree kruskal(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1)
    return SpanningTree{};
  const std::size_t m = g.edge_count();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double wa = g.edge_weight(a), wb = g.edge_weight(b);
    return wa < wb || (wa == wb && a < b);
  });
  DisjointSetForest dsu(n);
  std::vector<std::size_t> chosen;
  chosen.reserve(n - 1);
  for (std::size_t idx : order) {
    const Edge e = g.edge(idx);
    if (dsu.unite(e.u, e.v)) {
      chosen.push_back(idx);
      if (chosen.size() == n - 1)
        break;
    }
  }
  if (chosen.size() != n - 1)
    throw_disconnected(g);
  return finalize_tree(g, std::move(chosen));
}

SpanningTree prim_dense(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1)
    return SpanningTree{};

  constexpr double kInf = std::numeric_limits<double>::infinity();

  // Edge weights and indices by vertex pair. Dense-layout graphs answer both
  // in O(1); edge-list graphs get a transient matrix.
  std::vector<double> matrix;
  std::vector<std::size_t> index_matrix;
  const bool dense = g.has_dense_layout();
  if (!dense) {
    if (n > kDenseMatrixVertexCap)
      throw SizeCapError("prim_dense on an edge-list graph is capped at n = " +
                         std::to_string(kDenseMatrixVertexCap) +
                         " (use kruskal for large sparse inputs)");
    matrix.assign(n * n, kInf);
    index_matrix.assign(n * n, 0);
    g.for_each_edge([&](std::size_t idx, const Edge& e) {
      matrix[e.u * n + e.v] = e.weight;
      matrix[e.v * n + e.u] = e.weight;
      index_matrix[e.u * n + e.v] = idx;
      index_matrix[e.v * n + e.u] = idx;
    });
  }
  const auto weight_of = [&](std::size_t u, std::size_t v) {
    return dense ? g.weight_between(static_cast<VertexId>(u),
                                    static_cast<VertexId>(v))
                 : matrix[u * n + v];
  };
  const auto index_of = [&](std::size_t u, std::size_t v) {
    return dense ? g.pair_index(static_cast<VertexId>(u),
                                static_cast<VertexId>(v))
                 : index_matrix[u * n + v];
  };

  std::vector<double> best(n, kInf);
  std::vector<std::size_t> best_from(n, 0);
  std::vector<char> in_tree(n, 0);
  in_tree[0] = 1;
  for (std::size_t v = 1; v < n; ++v)
    best[v] = weight_of(0, v);

  std::vector<std::size_t> chosen;
  chosen.reserve(n - 1);
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t pick = n;
    double pick_weight = kInf;
    for (std::size_t v = 0; v < n; ++v)
      if (!in_tree[v] && best[v] < pick_weight) {
        pick_weight = best[v];
        pick = v;
      }
    if (pick == n)
      throw_disconnected(g);
    in_tree[pick] = 1;
    chosen.push_back(index_of(best_from[pick], pick));
    for (std::size_t v = 0; v < n; ++v)
      if (!in_tree[v]) {
        const double w = weight_of(pick, v);
        if (w < best[v]) {
          best[v] = w;
          best_from[v] = pick;
        }
      }
  }
  return finalize_tree(g, std::move(chosen));
}

PhiMstResult brute_force_mst(const WeightedGraph& g, const CostSpec& spec,
                             const VertexColoring* coloring) {
  const std::size_t n = g.vertex_count();
  if (n > kBruteForceVertexCap)
    throw SizeCapError("brute-force MST is capped at n = " +
                       std::to_string(kBruteForceVertexCap) + ", got n = " +
                       std::to_string(n));
  if (!g.is_connected())
    throw_disconnected(g);
  if (!spec.phi2.is_zero() && coloring == nullptr)
    throw ValidationError("phi2 != 0 requires a vertex coloring");
  if (coloring != nullptr && coloring->size() != n)
    throw ValidationError("coloring size does not match vertex count");

  const std::span<const std::uint32_t> all_colors =
      coloring ? std::span<const std::uint32_t>(coloring->colors)
               : std::span<const std::uint32_t>{};

  if (n <= 1) {
    const double cost = spec.eval(0.0, all_colors);
    return PhiMstResult{SpanningTree{}, cost};
  }

  const std::size_t m = g.edge_count();
  const std::size_t k = n - 1;
  if (m < k)
    throw_disconnected(g);

  std::vector<Edge> edges(m);
  for (std::size_t i = 0; i < m; ++i)
    edges[i] = g.edge(i);

  // Enumerate all k-subsets of edge indices in lexicographic order; a subset
  // spans iff all k unions succeed. Every spanning tree contains all n
  // vertices, so phi2 sees the full coloring.
  std::vector<std::size_t> comb(k);
  std::iota(comb.begin(), comb.end(), std::size_t{0});
  bool found = false;
  double best_cost = 0.0;
  std::vector<std::size_t> best_comb;
  while (true) {
    DisjointSetForest dsu(n);
    bool spanning = true;
    double sum = 0.0;
    for (std::size_t i : comb) {
      if (!dsu.unite(edges[i].u, edges[i].v)) {
        spanning = false;
        break;
      }
      sum += edges[i].weight;
    }
    if (spanning) {
      const double cost = spec.eval(sum, all_colors);
      if (!found || cost < best_cost) {
        found = true;
        best_cost = cost;
        best_comb = comb;
      }
    }
    // next combination
    std::size_t pos = k;
    while (pos > 0 && comb[pos - 1] == m - k + pos - 1)
      --pos;
    if (pos == 0)
      break;
    ++comb[pos - 1];
    for (std::size_t j = pos; j < k; ++j)
      comb[j] = comb[j - 1] + 1;
  }
  if (!found)
    throw_disconnected(g);
  return PhiMstResult{finalize_tree(g, std::move(best_comb)), best_cost};
}

PhiMstResult phi_mst(const WeightedGraph& g, const CostSpec& spec,
                     const VertexColoring* coloring) {
  if (spec.phi2.is_zero()) {
    // Strictly increasing phi1 of the weight sum: the argmin is the ordinary
    // MST, only the reported cost changes.
    SpanningTree tree =
        g.has_dense_layout() ? prim_dense(g) : kruskal(g);
    const double cost = spec.phi1(tree.total_weight);
    return PhiMstResult{std::move(tree), cost};
  }
  if (g.vertex_count() > kBruteForceVertexCap)
    throw SizeCapError(
        "phi-MST with a nonzero vertex cost is a hard discrete optimization "
        "problem; only exhaustive solves up to n = " +
        std::to_string(kBruteForceVertexCap) + " are supported");
  return brute_force_mst(g, spec, coloring);
}

} // namespace mstsketch
