#include "doctest.h"

#include <random>

#include "apx/errors.hpp"
#include "apx/subdivision.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

using namespace apx;

namespace {

BigInt volume_sum(const Graph& g, const std::vector<Cell>& cells) {
  const auto config = PointConfiguration::build(g);
  BigInt total = 0;
  for (const auto& c : cells) total += normalized_volume(config.points_of(c.points));
  return total;
}

}  // namespace

TEST_CASE("lift weights") {
  const auto config = PointConfiguration::build(fixtures::cycle(4));
  const auto w = Lift{{0, 3}}.weights(config);
  CHECK(std::count(w.begin(), w.end(), 0) == 2);
  CHECK(std::count(w.begin(), w.end(), 1) == static_cast<long>(w.size()) - 2);
}

TEST_CASE("subdivision of C4 along {0,3}") {
  const auto g = fixtures::cycle(4);
  const auto cells = edge_contraction_subdivision(g, {0, 3});
  REQUIRE(cells.size() == 6);
  const auto config = PointConfiguration::build(g);
  for (const auto& c : cells) {
    CHECK(c.points.size() == 4);
    CHECK(is_simplicial(c, 3));
    CHECK(check_cell(config, {0, 3}, c).passed());
    CHECK(normalized_volume(config.points_of(c.points)) == 2);
  }
  CHECK(volume_sum(g, cells) == 12);

  const auto corr = facet_correspondence(g, {0, 3}, cells);
  CHECK(corr.facets.size() == 6);
  CHECK(corr.contraction.graph == fixtures::cycle(3));
  for (std::size_t c = 0; c < cells.size(); ++c)
    CHECK(check_simpliciality_transfer(cells[c], 3, corr.facets[corr.image[c]], 2));
}

TEST_CASE("subdivision of C5 along {0,4}") {
  const auto g = fixtures::cycle(5);
  const auto cells = edge_contraction_subdivision(g, {0, 4});
  REQUIRE(cells.size() == 6);
  for (const auto& c : cells) {
    CHECK(c.points.size() == 6);
    CHECK_FALSE(is_simplicial(c, 4));
  }
  CHECK(volume_sum(g, cells) == 30);
  const auto corr = facet_correspondence(g, {0, 4}, cells);
  CHECK(corr.facets.size() == 6);
  CHECK(corr.facets.size() == oracles::brute_force_facets(
                                   PointConfiguration::build(corr.contraction.graph)).size());
}

TEST_CASE("single edge subdivision") {
  const auto cells = edge_contraction_subdivision(fixtures::single_edge(), {0, 1});
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].points == std::vector<DirectedEdge>{{0, 1}, {1, 0}});
  CHECK(cells[0].h == 0);
  CHECK(cells[0].gamma == ExactVector{0});
  const auto corr = facet_correspondence(fixtures::single_edge(), {0, 1}, cells);
  REQUIRE(corr.facets.size() == 1);
  CHECK(corr.facets[0].support.empty());
  CHECK_THROWS_AS(edge_contraction_subdivision(fixtures::cycle(4), {0, 2}), EdgeNotInGraph);
}

TEST_CASE("product correspondence on the running example") {
  const auto g = fixtures::running_example();
  const ContractionEdge e{0, 3};
  const auto cells = edge_contraction_subdivision(g, e);
  const auto parts = decompose_at_edge(g, e);
  CHECK(parts.first == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
  const auto pc = product_correspondence(g, parts, e, cells);
  CHECK(pc.first.graph == fixtures::cycle(3));
  CHECK(pc.first.facets.size() == 6);
  const auto second_oracle =
      oracles::brute_force_facets(PointConfiguration::build(pc.second.graph));
  CHECK(pc.second.facets.size() == second_oracle.size());
  CHECK(cells.size() == 6 * second_oracle.size());
  for (std::size_t c = 0; c < cells.size(); ++c)
    CHECK(check_simpliciality_transfer(cells[c], 6, pc, c));
  CHECK(volume_sum(g, cells) == normalized_volume(PointConfiguration::build(g)));
}

TEST_CASE("product correspondence degenerates to single-graph mode") {
  const auto g = fixtures::cycle(5);
  const ContractionEdge e{0, 4};
  const auto cells = edge_contraction_subdivision(g, e);
  const SharedEdgeDecomposition parts{g.edges(), {{0, 4}}};
  const auto pc = product_correspondence(g, parts, e, cells);
  CHECK(pc.second.graph.node_count() == 1);
  CHECK(pc.second.facets.size() == 1);
  CHECK(pc.first.facets.size() == cells.size());
  const auto auto_parts = decompose_at_edge(g, e);
  CHECK(auto_parts.second == std::vector<Edge>{{0, 4}});
}

TEST_CASE("invalid shared-edge decompositions") {
  const auto g = fixtures::cycle(4);
  const ContractionEdge e{0, 3};
  const auto cells = edge_contraction_subdivision(g, e);
  CHECK_THROWS_AS(product_correspondence(g, {{{0, 1}, {1, 2}, {2, 3}}, {{0, 3}}}, e, cells),
                  NotAValidSharedEdgeDecomposition);
  CHECK_THROWS_AS(
      product_correspondence(g, {{{0, 1}, {0, 3}}, {{0, 3}, {1, 2}, {2, 3}}}, e, cells),
      NotAValidSharedEdgeDecomposition);
  CHECK_THROWS_AS(validate_decomposition(g, e, {{{0, 3}, {0, 1}}, {{0, 3}, {2, 3}}}),
                  NotAValidSharedEdgeDecomposition);
}

TEST_CASE("random graphs: invariants, bijection and volume") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> nodes(2, 6);
    const auto g = randgraph::connected(rng, nodes(rng), 10);
    const auto e = randgraph::random_edge(rng, g);
    CAPTURE(trial);
    const auto config = PointConfiguration::build(g);
    const auto cells = edge_contraction_subdivision(g, e);
    for (const auto& c : cells) CHECK(check_cell(config, e, c).passed());
    CHECK_NOTHROW(facet_correspondence(g, e, cells));
    CHECK_NOTHROW(product_correspondence(g, decompose_at_edge(g, e), e, cells));
    CHECK(volume_sum(g, cells) == normalized_volume(config));
  }
}

TEST_CASE("regular subdivision with a generic lift is a triangulation") {
  const auto config = PointConfiguration::build(fixtures::cycle(3));
  std::vector<Rational> w;
  for (std::size_t k = 0; k < config.size(); ++k) w.emplace_back(Rational(static_cast<long>(k * k), 3));
  const auto cells = regular_subdivision(config, w);
  BigInt total = 0;
  for (const auto& c : cells) total += normalized_volume(config.points_of(c.points));
  CHECK(total == 6);
}
