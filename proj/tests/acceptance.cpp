// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// All comparisons are exact; each criterion has a wall-clock limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "apx/cell_analysis.hpp"
#include "apx/errors.hpp"
#include "apx/matroid.hpp"
#include "apx/polytope.hpp"
#include "apx/subdivision.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

using namespace apx;

namespace {

constexpr unsigned kCorpusSeed = 20240611;
constexpr int kCorpusSize = 50;
constexpr int kCorpusMaxNodes = 6;
constexpr int kCorpusMaxEdges = 12;
constexpr unsigned kTreeSeed = 777;
constexpr int kTreeCount = 40;
constexpr int kTreeMaxNodes = 7;

// Collects the first failure of a criterion.
struct Outcome {
  std::size_t checks = 0;
  std::string failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failure.empty()) failure = what;
  }
};

std::string str(const BigInt& v) { return v.str(); }

std::string describe(const Graph& g, const ContractionEdge& e) {
  std::string s = "graph {";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g.edges()[i].u) + "-" + std::to_string(g.edges()[i].v);
  }
  return s + "} edge " + std::to_string(e.k1) + "," + std::to_string(e.k2);
}

BigInt cell_volume(const PointConfiguration& config, const Cell& c) {
  return normalized_volume(config.points_of(c.points));
}

Outcome criterion_c4() {
  Outcome o;
  const auto g = fixtures::cycle(4);
  const ContractionEdge e{0, 3};
  const auto config = PointConfiguration::build(g);
  const auto cells = edge_contraction_subdivision(g, e);
  o.expect(cells.size() == 6, "cell count " + std::to_string(cells.size()) + " != 6");
  BigInt total = 0;
  for (const auto& c : cells) {
    const auto v = cell_volume(config, c);
    total += v;
    o.expect(is_simplicial(c, g.dimension()), "non-simplicial cell");
    o.expect(v == 2, "cell nvol " + str(v) + " != 2");
  }
  o.expect(total == 12, "sum " + str(total) + " != 12");
  o.expect(normalized_volume(config) == 12, "polytope nvol " + str(normalized_volume(config)));
  return o;
}

Outcome criterion_c5() {
  Outcome o;
  const auto g = fixtures::cycle(5);
  const ContractionEdge e{0, 4};
  const auto config = PointConfiguration::build(g);
  const auto cells = edge_contraction_subdivision(g, e);
  o.expect(cells.size() == 6, "cell count " + std::to_string(cells.size()) + " != 6");
  BigInt total = 0;
  for (const auto& c : cells) {
    const auto v = cell_volume(config, c);
    total += v;
    o.expect(c.points.size() == 6, "cell with " + std::to_string(c.points.size()) + " points");
    o.expect(subset_corank(c.points, e) == 1, "corank != 1");
    o.expect(v == 5, "cell nvol " + str(v) + " != 5");
    o.expect(subset_is_circuit(c.points, e), "cell is not a circuit");
    const auto sig = signature_of_corank1(c.points, e);
    o.expect(sig.computed == Signature{3, 3, 0}, "signature differs from (3,3,0)");
  }
  o.expect(total == 30, "sum " + str(total) + " != 30");
  o.expect(normalized_volume(config) == 30, "polytope nvol " + str(normalized_volume(config)));
  return o;
}

Outcome criterion_running_example() {
  Outcome o;
  const auto g = fixtures::running_example();
  const ContractionEdge e{0, 3};
  o.expect(g.node_count() == 7 && g.edge_count() == 11, "running example is not 7 nodes / 11 edges");
  const auto config = PointConfiguration::build(g);
  const auto cells = edge_contraction_subdivision(g, e);

  // (a) product correspondence
  const auto parts = decompose_at_edge(g, e);
  const auto pc = product_correspondence(g, parts, e, cells);
  o.expect(graph_kind(pc.first.graph) == GraphKind::kOddCycle && pc.first.graph.node_count() == 3,
           "first contracted part is not a triangle");
  o.expect(pc.first.facets.size() == 6, "triangle has " + std::to_string(pc.first.facets.size()) +
                                            " facets");
  const auto second_facets = oracles::brute_force_facets(PointConfiguration::build(pc.second.graph));
  o.expect(pc.second.facets.size() == second_facets.size(), "second part facet count disagrees with oracle");
  o.expect(cells.size() == 6 * second_facets.size(),
           std::to_string(cells.size()) + " cells != 6 * " + std::to_string(second_facets.size()));

  // (b) maximum corank
  const auto mc = max_corank(cells, e);
  const int bcr = balanced_circuit_rank(g, e);
  o.expect(mc.corank == 2, "max corank " + std::to_string(mc.corank));
  o.expect(bcr == 2, "balanced circuit rank " + std::to_string(bcr));
  o.expect(oracles::brute_balanced_circuit_rank(g, e) == 2, "brute-force balanced circuit rank != 2");

  // (c) the drawn corank-2 cell
  auto want = fixtures::corank2_cell();
  std::sort(want.begin(), want.end());
  const auto it = std::find_if(cells.begin(), cells.end(), [&](const Cell& c) { return c.points == want; });
  o.expect(it != cells.end(), "corank-2 cell not in the subdivision");
  if (it != cells.end()) {
    o.expect(it->points.size() == 9, "corank-2 cell size");
    o.expect(subset_corank(it->points, e) == 2, "corank-2 cell has another corank");
    const auto v = cell_volume_closed_form(*it, e);
    const auto oracle = cell_volume(config, *it);
    o.expect(v.value == oracle, "closed form " + str(v.value) + " != oracle " + str(oracle));
  }
  return o;
}

Outcome criterion_bijection(const std::vector<std::pair<Graph, ContractionEdge>>& corpus) {
  Outcome o;
  for (const auto& [g, e] : corpus) {
    const auto config = PointConfiguration::build(g);
    const auto cells = edge_contraction_subdivision(g, e);
    const auto contracted = contract_edge(g, e);
    const auto facets = oracles::brute_force_facets(PointConfiguration::build(contracted.graph));
    o.expect(cells.size() == facets.size(),
             describe(g, e) + ": " + std::to_string(cells.size()) + " cells, " +
                 std::to_string(facets.size()) + " facets");
    BigInt total = 0;
    for (const auto& c : cells) total += cell_volume(config, c);
    o.expect(total == normalized_volume(config), describe(g, e) + ": volume sum mismatch");
  }
  return o;
}

Outcome criterion_invariants(const std::vector<std::pair<Graph, ContractionEdge>>& corpus) {
  Outcome o;
  for (const auto& [g, e] : corpus) {
    const auto config = PointConfiguration::build(g);
    const auto cells = edge_contraction_subdivision(g, e);
    const auto corr = facet_correspondence(g, e, cells);
    const int contracted_dim = corr.contraction.graph.dimension();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto& c = cells[i];
      const auto where = describe(g, e) + " cell " + std::to_string(i);
      const auto check = check_cell(config, e, c);
      o.expect(check.contains_pair, where + ": contracted pair missing");
      o.expect(check.gamma_equal && check.h_zero, where + ": gamma or h");
      const auto r = verify_cell_properties(g, e, c);
      o.expect(r.properties_hold(), where + ": cell subgraph properties");
      o.expect(r.corank_is_cyclomatic, where + ": corank != cyclomatic number");
      if (r.corank <= 1) {
        o.expect(r.closed_form_volume.has_value() && *r.closed_form_volume == r.oracle_volume,
                 where + ": closed-form volume");
      }
      o.expect(check_simpliciality_transfer(c, g.dimension(), corr.facets[corr.image[i]],
                                            contracted_dim),
               where + ": simplicial cell with non-simplicial facet");
    }
  }
  return o;
}

Outcome criterion_special_graphs() {
  Outcome o;
  std::mt19937 rng(kTreeSeed);
  std::uniform_int_distribution<int> nodes(2, kTreeMaxNodes);
  for (int i = 0; i < kTreeCount; ++i) {
    const auto t = randgraph::tree(rng, nodes(rng));
    const auto e = randgraph::random_edge(rng, t);
    for (const auto& c : edge_contraction_subdivision(t, e))
      o.expect(is_simplicial(c, t.dimension()), describe(t, e) + ": non-simplicial cell");
  }
  const auto c6 = fixtures::cycle(6);
  for (const auto& c : edge_contraction_subdivision(c6, {0, 5}))
    o.expect(is_simplicial(c, 5), "C6 cell is not a simplex");
  const auto c7 = fixtures::cycle(7);
  for (const auto& c : edge_contraction_subdivision(c7, {0, 6}))
    o.expect(subset_is_circuit(c.points, {0, 6}), "C7 cell is not a circuit");
  return o;
}

Outcome criterion_matroid() {
  Outcome o;
  const auto run = [&](const Cell& c, const ContractionEdge& e, int dim, const std::string& where) {
    try {
      const auto r = verify_morphism(c, e, dim);
      o.expect(r.passed(), where);
    } catch (const MorphismViolation& ex) {
      o.expect(false, where + ": " + ex.what());
    }
  };
  for (const auto& c : edge_contraction_subdivision(fixtures::cycle(4), {0, 3})) run(c, {0, 3}, 3, "C4");
  for (const auto& c : edge_contraction_subdivision(fixtures::cycle(5), {0, 4})) run(c, {0, 4}, 4, "C5");
  auto want = fixtures::corank2_cell();
  std::sort(want.begin(), want.end());
  bool found = false;
  for (const auto& c : edge_contraction_subdivision(fixtures::running_example(), {0, 3})) {
    if (c.points != want) continue;
    found = true;
    run(c, {0, 3}, 6, "corank-2 cell");
  }
  o.expect(found, "corank-2 cell not found");
  return o;
}

Outcome criterion_oracles(const std::vector<std::pair<Graph, ContractionEdge>>& corpus) {
  Outcome o;
  for (const auto& [g, e] : corpus) {
    const auto config = PointConfiguration::build(g);
    const auto placed = normalized_volume(config);
    // A second placing order gives a different triangulation of the same polytope.
    auto reversed = config.points;
    std::reverse(reversed.begin(), reversed.end());
    const auto placed_reversed = normalized_volume(reversed);
    BigInt total = 0;
    for (const auto& c : edge_contraction_subdivision(g, e)) total += cell_volume(config, c);
    o.expect(placed == total && placed_reversed == total,
             describe(g, e) + ": triangulation " + str(placed) + "/" + str(placed_reversed) +
                 " vs subdivision " + str(total));
  }
  return o;
}

}  // namespace

int main() {
  const auto corpus = randgraph::corpus(kCorpusSeed, kCorpusSize, kCorpusMaxNodes, kCorpusMaxEdges);

  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "C4 edge {0,3}: 6 simplicial cells of nvol 2, total 12", 1, criterion_c4},
      {2, "C5 edge {0,4}: 6 corank-1 circuits of nvol 5, signature (3,3,0), total 30", 1,
       criterion_c5},
      {3, "running example edge {0,3}: product correspondence, max corank 2, corank-2 volume", 30,
       criterion_running_example},
      {4, "50 random graphs: cells biject with contracted facets, volumes sum", 300,
       [&] { return criterion_bijection(corpus); }},
      {5, "50 random graphs: per-cell invariant suite", 300,
       [&] { return criterion_invariants(corpus); }},
      {6, "trees and C6 triangulated, C7 cells are circuits", 60, criterion_special_graphs},
      {7, "matroid morphism on C4, C5 and the corank-2 cell", 60, criterion_matroid},
      {8, "50 random graphs: triangulation volume equals subdivision volume", 300,
       [&] { return criterion_oracles(corpus); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.failure = std::string("exception: ") + ex.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.failure.empty() && secs > c.limit_seconds)
      o.failure = "took " + std::to_string(secs) + " s";
    const bool ok = o.failure.empty();
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s [%zu checks, %.3f s, limit %.0f s]%s%s\n", ok ? "PASS" : "FAIL",
                c.id, c.title, o.checks, secs, c.limit_seconds, ok ? "" : " -- ", o.failure.c_str());
  }
  return failed == 0 ? 0 : 1;
}
