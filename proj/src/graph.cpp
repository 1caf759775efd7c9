#include "apx/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "apx/errors.hpp"

namespace apx {

namespace {

std::string edge_str(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

int max_label(std::span<const Edge> edges) {
  int m = -1;
  for (const auto& e : edges) m = std::max(m, e.v);
  return m;
}

// Path between two vertices of a forest (inclusive), via BFS over its edges.
std::vector<int> forest_path(std::span<const Edge> forest, int from, int to, int labels) {
  std::vector<std::vector<int>> adj(labels);
  for (const auto& e : forest) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> parent(labels, -2);
  std::queue<int> q;
  q.push(from);
  parent[from] = -1;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    if (x == to) break;
    for (int y : adj[x]) {
      if (parent[y] != -2) continue;
      parent[y] = x;
      q.push(y);
    }
  }
  std::vector<int> path;
  for (int x = to; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Graph::Graph(int node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)), adjacency_(std::max(node_count, 0)) {
  if (node_count < 1) throw InvalidGraph("a graph needs at least one node");
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u == e.v) throw InvalidGraph("loop at node " + std::to_string(e.u));
    if (e.u < 0 || e.v >= node_count)
      throw InvalidGraph("edge " + edge_str(e) + " outside node range");
    if (i > 0 && edges_[i - 1] == e) throw InvalidGraph("repeated edge " + edge_str(e));
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

Graph Graph::from_edges(const std::vector<Edge>& edges) {
  return Graph(std::max(max_label(edges) + 1, 1), edges);
}

bool Graph::has_edge(int a, int b) const {
  if (a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

bool Graph::is_connected() const {
  std::vector<bool> seen(node_count_, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adjacency_[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      ++count;
      stack.push_back(y);
    }
  }
  return count == node_count_;
}

void Graph::require_edge(const ContractionEdge& e) const {
  if (e.k1 == e.k2 || !has_edge(e.k1, e.k2))
    throw EdgeNotInGraph("{" + std::to_string(e.k1) + "," + std::to_string(e.k2) +
                         "} is not an edge of the graph");
}

Contraction contract_edge(const Graph& g, const ContractionEdge& e) {
  g.require_edge(e);
  const int keep = std::min(e.k1, e.k2);
  const int drop = std::max(e.k1, e.k2);
  Contraction out;
  out.node_map.resize(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) {
    const int merged = (v == drop) ? keep : v;
    out.node_map[v] = merged > drop ? merged - 1 : merged;
  }
  std::set<Edge> merged_edges;
  for (const auto& edge : g.edges()) {
    const int a = out.node_map[edge.u];
    const int b = out.node_map[edge.v];
    if (a != b) merged_edges.insert(Edge(a, b));
  }
  out.graph = Graph(g.node_count() - 1, {merged_edges.begin(), merged_edges.end()});
  return out;
}

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
  std::sort(out.begin(), out.end());
  return out;
}

bool Cycle::contains(const Edge& e) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (Edge(vertices[i], vertices[(i + 1) % vertices.size()]) == e) return true;
  return false;
}

CycleBasis fundamental_cycle_basis(std::span<const Edge> edges,
                                   std::optional<TreeRequirement> requirement) {
  const int labels = max_label(edges) + 1;
  UnionFind uf(std::max(labels, 1));
  CycleBasis basis;
  std::vector<Edge> order(edges.begin(), edges.end());
  std::sort(order.begin(), order.end());
  const bool include = requirement && requirement->mode == TreeConstraint::kInclude;
  const bool exclude = requirement && requirement->mode == TreeConstraint::kExclude;
  if (requirement && requirement->mode != TreeConstraint::kNone &&
      !std::binary_search(order.begin(), order.end(), requirement->edge))
    throw NoSuchSpanningTree("required edge " + edge_str(requirement->edge) +
                             " is not in the edge set");
  if (include) {
    std::stable_partition(order.begin(), order.end(),
                          [&](const Edge& e) { return e == requirement->edge; });
  }
  std::vector<Edge> deferred;
  for (const auto& e : order) {
    if (exclude && e == requirement->edge) {
      deferred.push_back(e);
      continue;
    }
    if (uf.unite(e.u, e.v)) {
      basis.spanning_tree.push_back(e);
    } else {
      basis.non_tree_edges.push_back(e);
    }
  }
  for (const auto& e : deferred) {
    if (uf.unite(e.u, e.v))
      throw NoSuchSpanningTree("edge " + edge_str(e) +
                               " is a bridge; every spanning tree contains it");
    basis.non_tree_edges.push_back(e);
  }
  std::sort(basis.spanning_tree.begin(), basis.spanning_tree.end());
  std::sort(basis.non_tree_edges.begin(), basis.non_tree_edges.end());
  for (const auto& e : basis.non_tree_edges) {
    basis.fundamental_cycles.push_back(
        Cycle{forest_path(basis.spanning_tree, e.u, e.v, labels)});
  }
  return basis;
}

CycleBasis fundamental_cycle_basis(const Graph& g, std::optional<TreeRequirement> requirement) {
  if (!g.is_connected()) throw DisconnectedGraph("graph is not connected");
  return fundamental_cycle_basis(std::span<const Edge>(g.edges()), requirement);
}

std::vector<int> touched_vertices(std::span<const Edge> edges) {
  std::vector<int> out;
  for (const auto& e : edges) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int component_count(std::span<const Edge> edges) {
  const auto vertices = touched_vertices(edges);
  UnionFind uf(std::max(max_label(edges) + 1, 1));
  int merges = 0;
  for (const auto& e : edges)
    if (uf.unite(e.u, e.v)) ++merges;
  return static_cast<int>(vertices.size()) - merges;
}

int cyclomatic_number(std::span<const Edge> edges) {
  return static_cast<int>(edges.size()) - static_cast<int>(touched_vertices(edges).size()) +
         component_count(edges);
}

int cyclomatic_number(const Graph& g) {
  // Isolated nodes count as components, so they cancel out.
  return cyclomatic_number(std::span<const Edge>(g.edges()));
}

bool is_forest(std::span<const Edge> edges) { return cyclomatic_number(edges) == 0; }

bool is_spanning_tree(std::span<const Edge> edges, int node_count) {
  if (node_count == 1) return edges.empty();
  return static_cast<int>(edges.size()) == node_count - 1 &&
         static_cast<int>(touched_vertices(edges).size()) == node_count &&
         component_count(edges) == 1;
}

Cycle as_cycle(std::span<const Edge> edges) {
  if (edges.size() < 3) throw NotACycle("fewer than three edges");
  std::map<int, std::vector<int>> adj;
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (const auto& [node, nbrs] : adj)
    if (nbrs.size() != 2) throw NotACycle("node " + std::to_string(node) + " has degree " +
                                          std::to_string(nbrs.size()));
  if (component_count(edges) != 1) throw NotACycle("edge set is disconnected");
  Cycle c;
  int prev = -1;
  int cur = adj.begin()->first;
  do {
    c.vertices.push_back(cur);
    const auto& nbrs = adj[cur];
    const int next = (nbrs[0] != prev) ? nbrs[0] : nbrs[1];
    prev = cur;
    cur = next;
  } while (cur != c.vertices.front());
  return c;
}

bool is_balanced_cycle(std::span<const Edge> cycle_edges, const ContractionEdge& e) {
  as_cycle(cycle_edges);
  const auto other = std::count_if(cycle_edges.begin(), cycle_edges.end(),
                                   [&](const Edge& x) { return !e.matches(x); });
  return other % 2 == 0;
}

bool is_balanced_subgraph(std::span<const Edge> edges, const ContractionEdge& e) {
  // Parity of the non-contracted edge count is additive over Z2 under
  // symmetric difference, so checking a fundamental basis suffices.
  const CycleBasis basis = fundamental_cycle_basis(edges);
  for (const auto& cycle : basis.fundamental_cycles) {
    const auto cycle_edges = cycle.edges();
    if (!is_balanced_cycle(cycle_edges, e)) return false;
  }
  return true;
}

BalancedSubgraph max_balanced_subgraph(const Graph& g, const ContractionEdge& e) {
  g.require_edge(e);
  const int nodes = g.node_count();
  if (nodes > 26) throw InvalidGraph("balanced circuit rank search limited to 26 nodes");
  // H is balanced iff some colouring c has c(u) != c(v) on every edge of H
  // other than e and c(k1) == c(k2) if e is in H. For a fixed colouring the
  // consistent edge set is the largest such H, and adding edges never lowers
  // the cyclomatic number. Node 0 is fixed to colour 0 (global flip symmetry).
  BalancedSubgraph best;
  best.cyclomatic = -1;
  const unsigned long long total = 1ULL << (nodes - 1);
  std::vector<Edge> consistent;
  for (unsigned long long mask = 0; mask < total; ++mask) {
    auto color = [&](int v) { return v == 0 ? 0 : static_cast<int>((mask >> (v - 1)) & 1ULL); };
    consistent.clear();
    for (const auto& edge : g.edges()) {
      const bool same = color(edge.u) == color(edge.v);
      if (same == e.matches(edge)) consistent.push_back(edge);
    }
    const int mu = cyclomatic_number(consistent);
    if (mu > best.cyclomatic) {
      best.cyclomatic = mu;
      best.edges = consistent;
      best.coloring.assign(nodes, 0);
      for (int v = 0; v < nodes; ++v) best.coloring[v] = color(v);
    }
  }
  return best;
}

int balanced_circuit_rank(const Graph& g, const ContractionEdge& e) {
  return max_balanced_subgraph(g, e).cyclomatic;
}

std::vector<Cycle> all_cycles(std::span<const Edge> edges) {
  const int labels = max_label(edges) + 1;
  std::vector<std::vector<int>> adj(std::max(labels, 0));
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<Cycle> out;
  std::vector<int> path;
  std::vector<bool> on_path(labels, false);
  // Each cycle is rooted at its smallest vertex and listed in the direction
  // whose second vertex is smaller than its last.
  std::function<void(int, int)> dfs = [&](int start, int x) {
    for (int y : adj[x]) {
      if (y == start && path.size() >= 3 && path[1] < path.back()) {
        out.push_back(Cycle{path});
      }
      if (y <= start || on_path[y]) continue;
      on_path[y] = true;
      path.push_back(y);
      dfs(start, y);
      path.pop_back();
      on_path[y] = false;
    }
  };
  for (int s = 0; s < labels; ++s) {
    path = {s};
    on_path[s] = true;
    dfs(s, s);
    on_path[s] = false;
  }
  return out;
}

std::vector<Cycle> chordless_cycles(std::span<const Edge> edges) {
  std::set<Edge> present(edges.begin(), edges.end());
  std::vector<Cycle> out;
  for (auto& cycle : all_cycles(edges)) {
    const auto own = cycle.edges();
    bool chord = false;
    for (std::size_t i = 0; i < cycle.vertices.size() && !chord; ++i) {
      for (std::size_t j = i + 1; j < cycle.vertices.size() && !chord; ++j) {
        const Edge candidate(cycle.vertices[i], cycle.vertices[j]);
        if (present.count(candidate) &&
            !std::binary_search(own.begin(), own.end(), candidate))
          chord = true;
      }
    }
    if (!chord) out.push_back(std::move(cycle));
  }
  return out;
}

int circumference(std::span<const Edge> edges) {
  int best = 0;
  for (const auto& c : all_cycles(edges)) best = std::max(best, static_cast<int>(c.length()));
  return best;
}

}  // namespace apx
