#pragma once

// Simple undirected graphs, edge contraction, and cycle-space tools
// (fundamental bases, balanced cycles, balanced circuit rank).

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace apx {

/// Undirected edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(int node) const { return u == node || v == node; }
  auto operator<=>(const Edge&) const = default;
};

/// Directed edge (from, to); labels the point e_from - e_to.
struct DirectedEdge {
  int from = 0;
  int to = 0;

  DirectedEdge reversed() const { return {to, from}; }
  Edge undirected() const { return Edge(from, to); }
  auto operator<=>(const DirectedEdge&) const = default;
};

/// The edge {k1, k2} being contracted. Order is kept as given: k1 is the
/// root of the alternating-basis construction.
struct ContractionEdge {
  int k1 = 0;
  int k2 = 0;

  Edge edge() const { return Edge(k1, k2); }
  bool matches(const Edge& e) const { return e == edge(); }
  bool matches(const DirectedEdge& d) const { return d.undirected() == edge(); }
  bool operator==(const ContractionEdge&) const = default;
};

class Graph {
 public:
  Graph() = default;
  /// Throws InvalidGraph on loops, repeated edges or labels outside [0, node_count).
  Graph(int node_count, std::vector<Edge> edges);
  /// Node count is inferred as max label + 1.
  static Graph from_edges(const std::vector<Edge>& edges);

  int node_count() const { return node_count_; }
  /// Number of coordinates of the ambient space of the point configuration.
  int dimension() const { return node_count_ - 1; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(int a, int b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
  const std::vector<int>& neighbors(int node) const { return adjacency_[node]; }
  bool is_connected() const;

  /// Throws EdgeNotInGraph when e is not an edge.
  void require_edge(const ContractionEdge& e) const;

  bool operator==(const Graph& other) const {
    return node_count_ == other.node_count_ && edges_ == other.edges_;
  }

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

struct Contraction {
  Graph graph;
  /// node_map[v] is the label of v in the contracted graph.
  std::vector<int> node_map;
};

/// Merges k1 and k2 into one node labelled min(k1, k2), drops the loop and
/// parallel edges, and compacts labels to 0..n-1.
Contraction contract_edge(const Graph& g, const ContractionEdge& e);

/// A cycle as a closed vertex sequence v0, v1, ..., v_{m-1} (edge v_{m-1} v0 implied).
struct Cycle {
  std::vector<int> vertices;

  std::size_t length() const { return vertices.size(); }
  /// Sorted undirected edges.
  std::vector<Edge> edges() const;
  bool contains(const Edge& e) const;
  bool operator==(const Cycle&) const = default;
};

struct CycleBasis {
  std::vector<Edge> spanning_tree;
  std::vector<Edge> non_tree_edges;
  /// fundamental_cycles[i] is closed by non_tree_edges[i].
  std::vector<Cycle> fundamental_cycles;
};

enum class TreeConstraint { kNone, kInclude, kExclude };

struct TreeRequirement {
  Edge edge;
  TreeConstraint mode = TreeConstraint::kNone;
};

/// Spanning forest of an arbitrary edge set plus its fundamental cycles.
/// Throws NoSuchSpanningTree when the requirement cannot be honoured.
CycleBasis fundamental_cycle_basis(std::span<const Edge> edges,
                                   std::optional<TreeRequirement> requirement = std::nullopt);
/// Same for a whole graph, which must be connected (DisconnectedGraph otherwise).
CycleBasis fundamental_cycle_basis(const Graph& g,
                                   std::optional<TreeRequirement> requirement = std::nullopt);

/// |E| - |V| + components, over the vertices touched by the edges.
int cyclomatic_number(std::span<const Edge> edges);
int cyclomatic_number(const Graph& g);

int component_count(std::span<const Edge> edges);
std::vector<int> touched_vertices(std::span<const Edge> edges);
bool is_forest(std::span<const Edge> edges);
/// True iff the edges form a tree spanning nodes 0..node_count-1.
bool is_spanning_tree(std::span<const Edge> edges, int node_count);

/// Throws NotACycle unless the edges form exactly one cycle.
Cycle as_cycle(std::span<const Edge> edges);

/// Balanced iff the cycle has an even number of edges other than e.
bool is_balanced_cycle(std::span<const Edge> cycle_edges, const ContractionEdge& e);
/// Every cycle of the subgraph is balanced.
bool is_balanced_subgraph(std::span<const Edge> edges, const ContractionEdge& e);

/// A balanced subgraph of maximum cyclomatic number together with the node
/// 2-colouring certifying that it is balanced.
struct BalancedSubgraph {
  std::vector<Edge> edges;
  std::vector<int> coloring;
  int cyclomatic = 0;
};

BalancedSubgraph max_balanced_subgraph(const Graph& g, const ContractionEdge& e);
int balanced_circuit_rank(const Graph& g, const ContractionEdge& e);

/// Every simple cycle of the edge set, each listed once.
std::vector<Cycle> all_cycles(std::span<const Edge> edges);
/// Cycles without a chord among the given edges.
std::vector<Cycle> chordless_cycles(std::span<const Edge> edges);
/// Length of the longest cycle; 0 for forests.
int circumference(std::span<const Edge> edges);

}  // namespace apx
