#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mstsketch/errors.hpp"
#include "mstsketch/mst.hpp"
#include "../support/test_graphs.hpp"

using namespace mstsketch;
using testsupport::random_connected_graph;

namespace {

WeightedGraph triangle_123() {
  return WeightedGraph::from_edge_list(3, {{0, 1, 1.0}, {0, 2, 2.0}, {1, 2, 3.0}});
}

} // namespace

TEST_CASE("kruskal picks the two cheapest triangle edges") {
  const SpanningTree t = kruskal(triangle_123());
  CHECK(t.total_weight == 3.0);
  CHECK(t.edge_indices == std::vector<std::size_t>{0, 1});
}

TEST_CASE("kruskal on a two-vertex graph") {
  const WeightedGraph g = WeightedGraph::from_edge_list(2, {{0, 1, 0.75}});
  CHECK(kruskal(g).total_weight == 0.75);
}

TEST_CASE("kruskal rejects disconnected graphs") {
  const WeightedGraph g = WeightedGraph::from_edge_list(3, {{0, 1, 0.5}});
  CHECK_THROWS_WITH_AS(kruskal(g), doctest::Contains("disconnected"),
                       ValidationError);
  CHECK_THROWS_AS(prim_dense(g), ValidationError);
}

TEST_CASE("prim matches kruskal on the triangle and handles n = 1") {
  CHECK(prim_dense(triangle_123()).total_weight == 3.0);
  const WeightedGraph single = WeightedGraph::from_edge_list(1, {});
  CHECK(prim_dense(single).total_weight == 0.0);
  CHECK(prim_dense(single).edge_indices.empty());
  CHECK(kruskal(single).total_weight == 0.0);
}

TEST_CASE("prim and kruskal agree on a complete n=1000 graph") {
  RandomStream rng(2024);
  const WeightedGraph g =
      WeightedGraph::complete(1000, [&] { return rng.uniform01(); });
  const SpanningTree p = prim_dense(g);
  const SpanningTree k = kruskal(g);
  CHECK(p.total_weight == doctest::Approx(k.total_weight).epsilon(1e-9));
  CHECK(p.edge_indices == k.edge_indices); // continuous weights: a.s. unique
}

TEST_CASE("brute force agrees with kruskal on seeded complete graphs") {
  RandomStream rng(6);
  const WeightedGraph g =
      WeightedGraph::complete(6, [&] { return rng.uniform01(); });
  const CostSpec linear;
  const PhiMstResult bf = brute_force_mst(g, linear);
  const SpanningTree k = kruskal(g);
  CHECK(bf.cost == k.total_weight);
  CHECK(bf.tree.edge_indices == k.edge_indices);
}

TEST_CASE("brute force on equal weights returns the common tree cost") {
  const WeightedGraph g = WeightedGraph::complete(4, [] { return 1.0; });
  const PhiMstResult bf = brute_force_mst(g, CostSpec{});
  CHECK(bf.cost == 3.0);
  CHECK(bf.tree.edge_indices.size() == 3);
}

TEST_CASE("brute force under a power transform follows the linear optimum") {
  RandomStream rng(5);
  const WeightedGraph g =
      WeightedGraph::complete(5, [&] { return rng.uniform01(); });
  CostSpec spec;
  spec.phi1 = EdgeCostTransform::power(0.5);
  const PhiMstResult bf = brute_force_mst(g, spec);
  const SpanningTree k = kruskal(g);
  CHECK(bf.tree.edge_indices == k.edge_indices);
  CHECK(bf.cost == std::pow(k.total_weight, 0.5));
}

TEST_CASE("brute force enforces its caps") {
  RandomStream rng(9);
  const WeightedGraph big =
      WeightedGraph::complete(9, [&] { return rng.uniform01(); });
  CHECK_THROWS_AS(brute_force_mst(big, CostSpec{}), SizeCapError);
  const WeightedGraph disconnected =
      WeightedGraph::from_edge_list(4, {{0, 1, 0.1}, {2, 3, 0.2}});
  CHECK_THROWS_AS(brute_force_mst(disconnected, CostSpec{}), ValidationError);
}

TEST_CASE("phi_mst examples") {
  CHECK(phi_mst(triangle_123(), CostSpec{}).cost == 3.0);
  CostSpec sqrt_spec;
  sqrt_spec.phi1 = EdgeCostTransform::power(0.5);
  CHECK(phi_mst(triangle_123(), sqrt_spec).cost ==
        doctest::Approx(1.7320508075688772).epsilon(1e-12));
}

TEST_CASE("phi_mst with log1p matches the exhaustive oracle") {
  RandomStream rng(64);
  const WeightedGraph g =
      WeightedGraph::complete(6, [&] { return rng.uniform01(); });
  CostSpec spec;
  spec.phi1 = EdgeCostTransform::log1p();
  const PhiMstResult fast = phi_mst(g, spec);
  const PhiMstResult oracle = brute_force_mst(g, spec);
  CHECK(fast.cost == oracle.cost);
  CHECK(fast.tree.edge_indices == oracle.tree.edge_indices);
}

TEST_CASE("phi_mst with a vertex cost delegates to the oracle or refuses") {
  CostSpec spec;
  spec.phi2 = VertexCostFunction::color_histogram({1.0, 2.0});
  const VertexColoring coloring({1, 2, 1}, 2);
  const PhiMstResult r = phi_mst(triangle_123(), spec, &coloring);
  CHECK(r.cost == 3.0 + 4.0); // linear optimum + all-vertex color cost

  RandomStream rng(3);
  const WeightedGraph big =
      WeightedGraph::complete(12, [&] { return rng.uniform01(); });
  const VertexColoring big_coloring(std::vector<std::uint32_t>(12, 1), 2);
  CHECK_THROWS_AS(phi_mst(big, spec, &big_coloring), SizeCapError);
  CHECK_THROWS_AS(phi_mst(triangle_123(), spec, nullptr), ValidationError);
}

TEST_CASE("solver agreement on random connected graphs") {
  RandomStream rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng.below(7);
    const WeightedGraph g = random_connected_graph(n, rng);
    const SpanningTree k = kruskal(g);
    const SpanningTree p = prim_dense(g);
    const PhiMstResult bf = brute_force_mst(g, CostSpec{});
    CHECK(k.total_weight == p.total_weight);
    CHECK(k.total_weight == bf.cost);
    CHECK(k.edge_indices == p.edge_indices);
    CHECK(k.edge_indices == bf.tree.edge_indices);
  }
}

TEST_CASE("monotone transforms never change the argmin edge set") {
  RandomStream rng(777);
  const EdgeCostTransform transforms[] = {
      EdgeCostTransform::power(0.5), EdgeCostTransform::power(0.25),
      EdgeCostTransform::log1p(),
      EdgeCostTransform::scaled(3.0, EdgeCostTransform::log1p())};
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 3 + rng.below(30);
    const WeightedGraph g = random_connected_graph(n, rng);
    const PhiMstResult base = phi_mst(g, CostSpec{});
    for (const auto& t : transforms) {
      CostSpec spec;
      spec.phi1 = t;
      const PhiMstResult r = phi_mst(g, spec);
      CHECK(r.tree.edge_indices == base.tree.edge_indices);
      CHECK(r.cost == doctest::Approx(t(base.cost)).epsilon(1e-9));
    }
  }
}

TEST_CASE("cut property: every tree edge is a cheapest crossing edge") {
  RandomStream rng(52);
  const WeightedGraph g = random_connected_graph(12, rng);
  const SpanningTree tree = kruskal(g);
  for (std::size_t removed : tree.edge_indices) {
    DisjointSetForest dsu(g.vertex_count());
    for (std::size_t idx : tree.edge_indices)
      if (idx != removed) {
        const Edge e = g.edge(idx);
        dsu.unite(e.u, e.v);
      }
    CHECK(dsu.component_count() == 2);
    const Edge cut_edge = g.edge(removed);
    const std::size_t side = dsu.find(cut_edge.u);
    g.for_each_edge([&](std::size_t, const Edge& e) {
      if (dsu.find(e.u) != dsu.find(e.v)) {
        CHECK(cut_edge.weight <= e.weight);
        (void)side;
      }
    });
  }
}

TEST_CASE("disjoint set forest invariants under random operations") {
  RandomStream rng(88);
  const std::size_t n = 64;
  DisjointSetForest dsu(n);
  std::size_t successful = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t a = rng.below(n), b = rng.below(n);
    successful += dsu.unite(a, b);
    const std::size_t root = dsu.find(a);
    CHECK(dsu.find(root) == root);
  }
  CHECK(dsu.component_count() + successful == n);
}

TEST_CASE("scaling edge weights scales the optimum and fixes the edge set") {
  RandomStream rng(4141);
  const std::size_t n = 20;
  std::vector<std::tuple<VertexId, VertexId, double>> raw;
  for (VertexId u = 0; u + 1 < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      raw.emplace_back(u, v, rng.uniform01());
  const WeightedGraph g = WeightedGraph::from_edge_list(n, raw);
  const SpanningTree base = kruskal(g);

  // Dyadic factors scale exactly in floating point.
  for (const double c : {0.5, 2.0, 1024.0}) {
    auto scaled = raw;
    for (auto& [u, v, w] : scaled)
      w *= c;
    const SpanningTree t = kruskal(WeightedGraph::from_edge_list(n, scaled));
    CHECK(t.edge_indices == base.edge_indices);
    CHECK(t.total_weight == c * base.total_weight);
  }
  for (const double c : {0.3, 7.7}) {
    auto scaled = raw;
    for (auto& [u, v, w] : scaled)
      w *= c;
    const SpanningTree t = kruskal(WeightedGraph::from_edge_list(n, scaled));
    CHECK(t.edge_indices == base.edge_indices);
    CHECK(t.total_weight == doctest::Approx(c * base.total_weight).epsilon(1e-12));
  }
}

TEST_CASE("kruskal tie-break is deterministic by edge index") {
  const WeightedGraph g = WeightedGraph::from_edge_list(
      3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}});
  const SpanningTree t = kruskal(g);
  CHECK(t.edge_indices == std::vector<std::size_t>{0, 1});
}
