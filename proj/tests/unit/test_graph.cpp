#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "mstsketch/distributions.hpp"
#include "mstsketch/errors.hpp"
#include "mstsketch/graph.hpp"

using namespace mstsketch;

namespace {

std::vector<std::tuple<VertexId, VertexId, double>> all_edges(const WeightedGraph& g) {
  std::vector<std::tuple<VertexId, VertexId, double>> out;
  g.for_each_edge([&](std::size_t, const Edge& e) {
    out.emplace_back(e.u, e.v, e.weight);
  });
  return out;
}

} // namespace

TEST_CASE("complete graph with a constant sampler") {
  const WeightedGraph g = WeightedGraph::complete(3, [] { return 1.0; });
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.is_complete());
  g.for_each_edge([](std::size_t, const Edge& e) { CHECK(e.weight == 1.0); });
}

TEST_CASE("complete graph edge count and support bounds") {
  RandomStream rng(7);
  const WeightModel model = WeightModel::uniform(0, 1);
  const WeightedGraph g =
      WeightedGraph::complete(100, [&] { return model.sample(rng); });
  CHECK(g.edge_count() == 4950);
  g.for_each_edge([](std::size_t, const Edge& e) {
    CHECK(e.weight >= 0.0);
    CHECK(e.weight < 1.0);
  });
}

TEST_CASE("seeded exponential complete graph replays the sampler") {
  const std::uint64_t seed = 424242;
  RandomStream rng(seed);
  const WeightModel model = WeightModel::exponential(1.0);
  const WeightedGraph g =
      WeightedGraph::complete(2, [&] { return model.sample(rng); });
  REQUIRE(g.edge_count() == 1);

  // Independent replay: raw engine output mapped through the inverse CDF.
  std::mt19937_64 engine(seed);
  const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  const double expected = -std::log1p(-u);
  CHECK(g.edge(0).weight == expected);
}

TEST_CASE("complete graph rejects n < 2") {
  CHECK_THROWS_AS(WeightedGraph::complete(1, [] { return 1.0; }),
                  ValidationError);
}

TEST_CASE("from_edge_list builds a path graph") {
  const WeightedGraph g =
      WeightedGraph::from_edge_list(3, {{0, 1, 0.5}, {1, 2, 0.7}});
  CHECK(g.edge_count() == 2);
  CHECK_FALSE(g.is_complete());
}

TEST_CASE("from_edge_list canonicalizes orientation") {
  const WeightedGraph g = WeightedGraph::from_edge_list(3, {{1, 0, 0.5}});
  const Edge e = g.edge(0);
  CHECK(e.u == 0);
  CHECK(e.v == 1);
  CHECK(e.weight == 0.5);
}

TEST_CASE("from_edge_list validation errors name the offending edge") {
  CHECK_THROWS_WITH_AS(
      WeightedGraph::from_edge_list(3, {{0, 1, 0.5}, {1, 0, 0.9}}),
      doctest::Contains("duplicate"), ValidationError);
  CHECK_THROWS_WITH_AS(WeightedGraph::from_edge_list(3, {{2, 2, 0.1}}),
                       doctest::Contains("self-loop"), ValidationError);
  CHECK_THROWS_WITH_AS(WeightedGraph::from_edge_list(3, {{0, 3, 0.1}}),
                       doctest::Contains("out of range"), ValidationError);
  CHECK_THROWS_WITH_AS(WeightedGraph::from_edge_list(3, {{0, 1, -0.1}}),
                       doctest::Contains("negative"), ValidationError);
}

TEST_CASE("completeness flag tracks the edge count exactly") {
  const WeightedGraph complete3 = WeightedGraph::from_edge_list(
      3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}});
  CHECK(complete3.is_complete());
  const WeightedGraph partial = WeightedGraph::from_edge_list(
      3, {{0, 1, 1.0}, {0, 2, 1.0}});
  CHECK_FALSE(partial.is_complete());
}

TEST_CASE("is_connected") {
  CHECK(WeightedGraph::complete(4, [] { return 1.0; }).is_connected());
  CHECK_FALSE(WeightedGraph::from_edge_list(3, {{0, 1, 0.3}}).is_connected());
  CHECK(WeightedGraph::from_edge_list(1, {}).is_connected());
}

TEST_CASE("dense layout pair indexing round-trips") {
  RandomStream rng(11);
  const WeightedGraph g =
      WeightedGraph::complete(23, [&] { return rng.uniform01(); });
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge e = g.edge(i);
    CHECK(e.u < e.v);
    CHECK(g.pair_index(e.u, e.v) == i);
    CHECK(g.weight_between(e.u, e.v) == e.weight);
  }
}

TEST_CASE("edge list file round-trip is the identity on canonical graphs") {
  RandomStream rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng.below(12);
    std::vector<std::tuple<VertexId, VertexId, double>> raw;
    for (VertexId u = 0; u + 1 < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (rng.uniform01() < 0.6)
          raw.emplace_back(u, v, rng.uniform01());
    const WeightedGraph g = WeightedGraph::from_edge_list(n, raw);

    std::ostringstream first;
    write_edge_list(first, g);
    std::istringstream in(first.str());
    const WeightedGraph reread = read_edge_list(in);
    std::ostringstream second;
    write_edge_list(second, reread);

    CHECK(reread.vertex_count() == g.vertex_count());
    CHECK(reread.edge_count() == g.edge_count());
    CHECK(second.str() == first.str());
    CHECK(all_edges(reread) == all_edges(g));
  }
}

TEST_CASE("edge list parser handles comments and rejects bad headers") {
  std::istringstream ok("# comment line\nn 3\n0 1 0.25\n# trailing\n1 2 0.5\n");
  const WeightedGraph g = read_edge_list(ok);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);

  std::istringstream missing("0 1 0.25\n");
  CHECK_THROWS_AS(read_edge_list(missing), ValidationError);
  std::istringstream garbage("n 3\n0 x 0.25\n");
  CHECK_THROWS_AS(read_edge_list(garbage), ValidationError);
}

TEST_CASE("vertex coloring validates its color range") {
  CHECK_NOTHROW(VertexColoring({1, 2, 1}, 2));
  CHECK_THROWS_AS(VertexColoring({1, 3}, 2), ValidationError);
  CHECK_THROWS_AS(VertexColoring({0}, 2), ValidationError);
}
