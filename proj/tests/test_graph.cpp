#include "doctest.h"

#include <random>

#include "apx/errors.hpp"
#include "apx/graph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

using namespace apx;

TEST_CASE("graph construction rejects non-simple input") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), InvalidGraph);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InvalidGraph);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InvalidGraph);
  CHECK(Graph::from_edges({{3, 1}, {1, 0}}).node_count() == 4);
}

TEST_CASE("contract_edge") {
  SUBCASE("5-cycle with chord") {
    const auto c = contract_edge(fixtures::contraction_example(), {0, 4});
    CHECK(c.graph.node_count() == 4);
    CHECK(c.graph.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(c.node_map == std::vector<int>{0, 1, 2, 3, 0});
  }
  SUBCASE("single edge") {
    const auto c = contract_edge(fixtures::single_edge(), {0, 1});
    CHECK(c.graph.node_count() == 1);
    CHECK(c.graph.edges().empty());
  }
  SUBCASE("running example") {
    const auto c = contract_edge(fixtures::running_example(), {0, 3});
    CHECK(c.graph.node_count() == 6);
    // Two pairs of parallel edges merge: {0,2}/{3,2} and {0,5}/{3,5}.
    CHECK(c.graph.edge_count() == 8);
    CHECK(c.node_map == std::vector<int>{0, 1, 2, 0, 3, 4, 5});
  }
  CHECK_THROWS_AS(contract_edge(fixtures::cycle(4), {0, 2}), EdgeNotInGraph);
}

TEST_CASE("cyclomatic number") {
  CHECK(cyclomatic_number(fixtures::star(5)) == 0);
  CHECK(cyclomatic_number(fixtures::cycle(5)) == 1);
  CHECK(cyclomatic_number(fixtures::running_example()) == 5);
}

TEST_CASE("fundamental cycle basis") {
  SUBCASE("C4 including {0,3}") {
    const auto b = fundamental_cycle_basis(fixtures::cycle(4),
                                           TreeRequirement{{0, 3}, TreeConstraint::kInclude});
    CHECK(std::find(b.spanning_tree.begin(), b.spanning_tree.end(), Edge(0, 3)) !=
          b.spanning_tree.end());
    REQUIRE(b.fundamental_cycles.size() == 1);
    CHECK(b.fundamental_cycles[0].length() == 4);
  }
  SUBCASE("tree") {
    CHECK(fundamental_cycle_basis(fixtures::path(4)).fundamental_cycles.empty());
  }
  SUBCASE("running example excluding {0,3}") {
    const auto b = fundamental_cycle_basis(fixtures::running_example(),
                                           TreeRequirement{{0, 3}, TreeConstraint::kExclude});
    CHECK(b.fundamental_cycles.size() == 5);
    int containing = 0;
    for (const auto& c : b.fundamental_cycles) {
      if (c.contains(Edge(0, 3))) ++containing;
      CHECK_NOTHROW(as_cycle(c.edges()));
    }
    CHECK(containing == 1);
  }
  CHECK_THROWS_AS(fundamental_cycle_basis(fixtures::path(3),
                                          TreeRequirement{{0, 1}, TreeConstraint::kExclude}),
                  NoSuchSpanningTree);
  CHECK_THROWS_AS(fundamental_cycle_basis(Graph(3, {{0, 1}})), DisconnectedGraph);
}

TEST_CASE("balanced cycles") {
  CHECK_FALSE(is_balanced_cycle(fixtures::cycle(4).edges(), {0, 3}));
  CHECK(is_balanced_cycle(fixtures::cycle(5).edges(), {0, 4}));
  CHECK(is_balanced_cycle(std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {3, 4}));
  CHECK_THROWS_AS(is_balanced_cycle(std::vector<Edge>{{0, 1}, {1, 2}}, {0, 1}), NotACycle);

  CHECK(is_balanced_subgraph(fixtures::star(4).edges(), {0, 1}));
  const std::vector<Edge> two_cycles{{0, 3}, {0, 2}, {2, 3}, {3, 5}, {0, 5}};
  CHECK(is_balanced_subgraph(two_cycles, {0, 3}));
  CHECK(cyclomatic_number(two_cycles) == 2);
  CHECK_FALSE(is_balanced_subgraph(fixtures::cycle(4).edges(), {0, 3}));
}

TEST_CASE("balanced circuit rank") {
  CHECK(balanced_circuit_rank(fixtures::cycle(4), {0, 3}) == 0);
  CHECK(balanced_circuit_rank(fixtures::cycle(5), {0, 4}) == 1);
  CHECK(balanced_circuit_rank(fixtures::running_example(), {0, 3}) == 2);

  const auto witness = max_balanced_subgraph(fixtures::running_example(), {0, 3});
  CHECK(is_balanced_subgraph(witness.edges, {0, 3}));
  CHECK(cyclomatic_number(witness.edges) == 2);

  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> nodes(2, 6);
    const Graph g = randgraph::connected(rng, nodes(rng), 10);
    const auto e = randgraph::random_edge(rng, g);
    CAPTURE(trial);
    const int rank = balanced_circuit_rank(g, e);
    CHECK(rank == oracles::brute_balanced_circuit_rank(g, e));
    CHECK(rank <= cyclomatic_number(g));
  }
}

TEST_CASE("symmetric difference of balanced cycles stays balanced") {
  const Graph g = fixtures::running_example();
  const ContractionEdge e{0, 3};
  std::vector<std::vector<Edge>> balanced;
  for (const auto& c : all_cycles(g.edges()))
    if (is_balanced_cycle(c.edges(), e)) balanced.push_back(c.edges());
  REQUIRE(balanced.size() >= 2);
  for (std::size_t i = 0; i < balanced.size(); ++i) {
    for (std::size_t j = i + 1; j < balanced.size(); ++j) {
      std::vector<Edge> sym;
      std::set_symmetric_difference(balanced[i].begin(), balanced[i].end(), balanced[j].begin(),
                                    balanced[j].end(), std::back_inserter(sym));
      std::vector<Edge> uni;
      std::set_union(balanced[i].begin(), balanced[i].end(), balanced[j].begin(),
                     balanced[j].end(), std::back_inserter(uni));
      if (is_balanced_subgraph(uni, e)) CHECK(is_balanced_subgraph(sym, e));
      // Parity of non-contracted edges is additive mod 2.
      auto odd = [&](const std::vector<Edge>& s) {
        return std::count_if(s.begin(), s.end(), [&](const Edge& x) { return !e.matches(x); }) % 2;
      };
      CHECK(odd(sym) == 0);
    }
  }
}

TEST_CASE("cycles, chordless cycles and circumference") {
  CHECK(circumference(fixtures::star(5).edges()) == 0);
  CHECK(circumference(fixtures::cycle(5).edges()) == 5);
  const auto g = fixtures::contraction_example();
  CHECK(all_cycles(g.edges()).size() == 3);
  CHECK(chordless_cycles(g.edges()).size() == 2);
  CHECK(circumference(g.edges()) == 5);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph r = randgraph::connected(rng, 6, 11);
    CHECK(all_cycles(r.edges()).size() == oracles::naive_cycles(r.edges()).size());
    CHECK(cyclomatic_number(r) == oracles::naive_cyclomatic(r.edges()));
  }
}
