#include "apx/cell_analysis.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "apx/errors.hpp"
#include "apx/polytope.hpp"

namespace apx {

namespace {

int affine_dim_of(const std::vector<DirectedEdge>& points, int dim) {
  std::vector<IntVector> pts;
  for (const auto& d : points) pts.push_back(phi(d, dim));
  return affine_dimension(pts);
}

// Coordinates are taken in a space large enough for every label in play.
int space_for(const std::vector<DirectedEdge>& points) {
  int top = 0;
  for (const auto& d : points) top = std::max({top, d.from, d.to});
  return top;
}

bool reaches(const std::vector<std::vector<int>>& adj, int from, int to) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<int> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (x == to) return true;
    for (int y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      stack.push_back(y);
    }
  }
  return false;
}

bool is_acyclic(const std::vector<std::vector<int>>& adj) {
  std::vector<int> indeg(adj.size(), 0);
  for (const auto& out : adj)
    for (int y : out) ++indeg[y];
  std::queue<int> ready;
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (indeg[v] == 0) ready.push(static_cast<int>(v));
  std::size_t removed = 0;
  while (!ready.empty()) {
    const int x = ready.front();
    ready.pop();
    ++removed;
    for (int y : adj[x])
      if (--indeg[y] == 0) ready.push(y);
  }
  return removed == adj.size();
}

bool is_single_cycle(const std::vector<Edge>& edges) {
  try {
    as_cycle(edges);
    return true;
  } catch (const NotACycle&) {
    return false;
  }
}

bool plain_circuit(const std::vector<DirectedEdge>& points, int dim) {
  const int size = static_cast<int>(points.size());
  if (affine_dim_of(points, dim) == size - 1) return false;
  for (int skip = 0; skip < size; ++skip) {
    std::vector<DirectedEdge> rest;
    for (int i = 0; i < size; ++i)
      if (i != skip) rest.push_back(points[i]);
    if (affine_dim_of(rest, dim) != size - 2) return false;
  }
  return true;
}

}  // namespace

CellSubgraphs cell_subgraphs(const std::vector<DirectedEdge>& points) {
  CellSubgraphs out;
  out.directed = points;
  std::sort(out.directed.begin(), out.directed.end());
  out.directed.erase(std::unique(out.directed.begin(), out.directed.end()), out.directed.end());
  std::set<Edge> und;
  for (const auto& d : out.directed) und.insert(d.undirected());
  out.undirected.assign(und.begin(), und.end());
  return out;
}

DirectedEdge psi(const DirectedEdge& d, const ContractionEdge& e, const Graph& g) {
  auto sigma = [&](int v) { return v == e.k1 ? e.k2 : (v == e.k2 ? e.k1 : v); };
  const DirectedEdge swapped{sigma(d.from), sigma(d.to)};
  return g.has_edge(swapped.from, swapped.to) ? swapped : d;
}

CellInvariantReport verify_cell_properties(const Graph& g, const ContractionEdge& e,
                                           const Cell& cell, bool with_volume) {
  const int n = g.dimension();
  const int nodes = g.node_count();
  const auto sub = cell_subgraphs(cell.points);
  CellInvariantReport r;

  r.corank = static_cast<int>(cell.points.size()) - affine_dim_of(cell.points, n) - 1;
  r.cyclomatic = cyclomatic_number(sub.undirected);
  r.simplicial = static_cast<int>(cell.points.size()) == n + 1;
  r.circuit = plain_circuit(cell.points, n);
  r.spanning_tree = is_spanning_tree(sub.undirected, nodes);
  r.chordless_cycle = is_single_cycle(sub.undirected);

  // (i) Remove the two contracted arcs; what is left must be acyclic and
  // must not close a longer cycle through either arc.
  const bool both_arcs = std::binary_search(sub.directed.begin(), sub.directed.end(),
                                            DirectedEdge{e.k1, e.k2}) &&
                         std::binary_search(sub.directed.begin(), sub.directed.end(),
                                            DirectedEdge{e.k2, e.k1});
  std::vector<std::vector<int>> adj(nodes);
  for (const auto& d : sub.directed)
    if (!e.matches(d)) adj[d.from].push_back(d.to);
  r.unique_directed_cycle =
      both_arcs && is_acyclic(adj) && !reaches(adj, e.k1, e.k2) && !reaches(adj, e.k2, e.k1);

  // (ii)
  r.spanning = static_cast<int>(touched_vertices(sub.undirected).size()) == nodes;

  // (iii)
  r.psi_closed = std::all_of(sub.directed.begin(), sub.directed.end(), [&](const DirectedEdge& d) {
    return std::binary_search(sub.directed.begin(), sub.directed.end(), psi(d, e, g));
  });

  // (iv)
  r.balanced = is_balanced_subgraph(sub.undirected, e);

  // (v) A spanning forest avoiding e; e is unavoidable only when it is a bridge.
  CycleBasis basis;
  try {
    basis = fundamental_cycle_basis(sub.undirected,
                                    TreeRequirement{e.edge(), TreeConstraint::kExclude});
  } catch (const NoSuchSpanningTree&) {
    basis = fundamental_cycle_basis(sub.undirected);
  }
  r.odd_basis_cycles = static_cast<int>(
      std::count_if(basis.fundamental_cycles.begin(), basis.fundamental_cycles.end(),
                    [](const Cycle& c) { return c.length() % 2 == 1; }));
  r.at_most_one_odd = r.odd_basis_cycles <= 1;

  r.corank_is_cyclomatic = r.corank == r.cyclomatic;
  r.simplicial_iff_tree = r.simplicial == r.spanning_tree;
  r.circuit_iff_cycle = r.circuit == r.chordless_cycle;

  if (with_volume) {
    const auto config = PointConfiguration::build(g);
    r.oracle_volume = normalized_volume(config.points_of(cell.points));
    if (r.corank <= 2) {
      try {
        r.closed_form_volume = cell_volume_closed_form(cell, e).value;
        r.volume_matches = *r.closed_form_volume == r.oracle_volume;
      } catch (const NoValidCyclePair&) {
        r.volume_matches = false;
      }
    }
  }
  return r;
}

void require_pairing(const std::vector<DirectedEdge>& points, const ContractionEdge& e) {
  const bool a = std::find(points.begin(), points.end(), DirectedEdge{e.k1, e.k2}) != points.end();
  const bool b = std::find(points.begin(), points.end(), DirectedEdge{e.k2, e.k1}) != points.end();
  if (a != b)
    throw PreconditionViolated("subset holds exactly one of the two contracted-edge points");
}

SubsetAnalysis analyze_subset(const std::vector<DirectedEdge>& points, const ContractionEdge& e) {
  require_pairing(points, e);
  SubsetAnalysis s;
  const int dim = std::max(space_for(points), std::max(e.k1, e.k2));
  s.graph = cell_subgraphs(points).undirected;
  s.affine_dim = affine_dim_of(points, dim);
  s.corank = static_cast<int>(points.size()) - s.affine_dim - 1;
  s.independent = s.corank == 0;
  s.circuit = !points.empty() && plain_circuit(points, dim);
  s.forest = is_forest(s.graph);
  s.single_cycle = is_single_cycle(s.graph);
  s.cyclomatic = cyclomatic_number(s.graph);
  const bool has_e = std::binary_search(s.graph.begin(), s.graph.end(), e.edge());
  s.predicted_dim = static_cast<int>(touched_vertices(s.graph).size()) + (has_e ? 1 : 0) -
                    component_count(s.graph) - 1;
  return s;
}

bool subset_is_affinely_independent(const std::vector<DirectedEdge>& points,
                                    const ContractionEdge& e) {
  return analyze_subset(points, e).independent;
}

bool subset_is_circuit(const std::vector<DirectedEdge>& points, const ContractionEdge& e) {
  return analyze_subset(points, e).circuit;
}

int subset_dimension(const std::vector<DirectedEdge>& points, const ContractionEdge& e) {
  return analyze_subset(points, e).affine_dim;
}

int subset_corank(const std::vector<DirectedEdge>& points, const ContractionEdge& e) {
  return analyze_subset(points, e).corank;
}

SignatureResult signature_of_corank1(const std::vector<DirectedEdge>& points,
                                     const ContractionEdge& e) {
  const auto s = analyze_subset(points, e);
  if (s.corank != 1) throw NotCorankOne("subset has corank " + std::to_string(s.corank));
  const int dim = std::max(space_for(points), std::max(e.k1, e.k2));
  std::vector<IntVector> pts;
  for (const auto& d : points) pts.push_back(phi(d, dim));
  SignatureResult out;
  out.coefficients = affine_dependence(pts).value();
  for (const auto& c : out.coefficients) {
    if (c > 0) {
      ++out.computed.plus;
    } else if (c < 0) {
      ++out.computed.minus;
    } else {
      ++out.computed.zero;
    }
  }
  if (out.computed.plus < out.computed.minus) std::swap(out.computed.plus, out.computed.minus);
  const int m = circumference(s.graph);
  const int half = (m + 1) / 2;
  out.closed_form = {half, half, static_cast<int>(points.size()) - 2 * half};

  int pos_a = -1, pos_b = -1;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] == DirectedEdge{e.k1, e.k2}) pos_a = static_cast<int>(i);
    if (points[i] == DirectedEdge{e.k2, e.k1}) pos_b = static_cast<int>(i);
  }
  if (pos_a >= 0 && pos_b >= 0) {
    const Rational& a = out.coefficients[pos_a];
    const Rational& b = out.coefficients[pos_b];
    if (!a.is_zero() || !b.is_zero()) out.pair_opposite = a * b < 0;
  }
  return out;
}

MaxCorank max_corank(const std::vector<Cell>& cells, const ContractionEdge& e) {
  MaxCorank best;
  best.corank = -1;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const int k = subset_corank(cells[c].points, e);
    if (k > best.corank) {
      best.corank = k;
      best.witness = c;
    }
  }
  if (best.corank < 0) best.corank = 0;
  return best;
}

std::vector<DirectedEdge> build_alternating_basis(const Graph& g, const ContractionEdge& e,
                                                  const std::vector<Edge>& tree) {
  g.require_edge(e);
  for (const auto& t : tree)
    if (!g.has_edge(t)) throw PreconditionViolated("tree edge is not an edge of the graph");
  if (!is_spanning_tree(tree, g.node_count()))
    throw PreconditionViolated("edge set is not a spanning tree");
  if (std::find(tree.begin(), tree.end(), e.edge()) == tree.end())
    throw TreeMissingContractedEdge("spanning tree does not contain the contracted edge");

  const int nodes = g.node_count();
  std::vector<std::vector<int>> adj(nodes);
  for (const auto& t : tree) {
    adj[t.u].push_back(t.v);
    adj[t.v].push_back(t.u);
  }
  std::vector<int> parent(nodes, -1), depth(nodes, 0), first_hop(nodes, -1);
  std::vector<bool> seen(nodes, false);
  std::queue<int> q;
  q.push(e.k1);
  seen[e.k1] = true;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      parent[y] = x;
      depth[y] = depth[x] + 1;
      first_hop[y] = (x == e.k1) ? y : first_hop[x];
      q.push(y);
    }
  }
  std::vector<DirectedEdge> basis{{e.k1, e.k2}, {e.k2, e.k1}};
  for (int i = 0; i < nodes; ++i) {
    if (i == e.k1 || i == e.k2) continue;
    const int exponent = first_hop[i] == e.k2 ? depth[i] - 1 : depth[i];
    if (exponent % 2 == 0) {
      basis.push_back({i, parent[i]});
    } else {
      basis.push_back({parent[i], i});
    }
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

Cell complete_basis(const Graph& g, const ContractionEdge& e,
                    const std::vector<DirectedEdge>& basis) {
  const auto config = PointConfiguration::build(g);
  const Lift lift{e};
  std::vector<ExactVector> rows;
  ExactVector rhs;
  for (const auto& d : basis) {
    if (d == DirectedEdge{e.k2, e.k1}) continue;
    rows.push_back(to_exact(phi(d, config.dim)));
    rhs.push_back(-lift.weight(d));
  }
  Cell cell;
  cell.gamma = solve_unique(ExactMatrix(rows), rhs);
  cell.h = 0;
  for (std::size_t k = 0; k < config.size(); ++k) {
    const Rational v = dot(config.points[k], cell.gamma) + lift.weight(config.labels[k]);
    if (v < 0) throw PreconditionViolated("basis does not span a lower face of the lift");
    if (v == 0) cell.points.push_back(config.labels[k]);
  }
  return cell;
}

int balanced_fundamental_cycles(const Graph& g, const ContractionEdge& e,
                                const std::vector<Edge>& tree) {
  std::vector<std::vector<int>> adj(g.node_count());
  for (const auto& t : tree) {
    adj[t.u].push_back(t.v);
    adj[t.v].push_back(t.u);
  }
  int count = 0;
  for (const auto& edge : g.edges()) {
    if (std::find(tree.begin(), tree.end(), edge) != tree.end()) continue;
    // Tree path between the endpoints.
    std::vector<int> parent(g.node_count(), -2);
    std::queue<int> q;
    q.push(edge.u);
    parent[edge.u] = -1;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : adj[x]) {
        if (parent[y] != -2) continue;
        parent[y] = x;
        q.push(y);
      }
    }
    int other = e.matches(edge) ? 0 : 1;
    for (int x = edge.v; parent[x] != -1; x = parent[x])
      if (!e.matches(Edge(x, parent[x]))) ++other;
    if (other % 2 == 0) ++count;
  }
  return count;
}

std::vector<Edge> max_balanced_tree(const Graph& g, const ContractionEdge& e) {
  g.require_edge(e);
  if (!g.is_connected()) throw DisconnectedGraph("graph is not connected");
  const int nodes = g.node_count();
  if (nodes > 26) throw InvalidGraph("tree search limited to 26 nodes");

  // Best colouring with k1 and k2 alike, so that e is consistent.
  std::vector<int> best_color;
  int best = -1;
  for (unsigned long long mask = 0; mask < (1ULL << (nodes - 1)); ++mask) {
    std::vector<int> color(nodes);
    for (int v = 1; v < nodes; ++v) color[v] = static_cast<int>((mask >> (v - 1)) & 1ULL);
    if (color[e.k1] != color[e.k2]) continue;
    std::vector<Edge> consistent;
    for (const auto& edge : g.edges())
      if ((color[edge.u] == color[edge.v]) == e.matches(edge)) consistent.push_back(edge);
    const int mu = cyclomatic_number(consistent);
    if (mu > best) {
      best = mu;
      best_color = color;
    }
  }

  // Grow a spanning tree of consistent edges: e first, then the consistent
  // set, then joining edges, flipping the colour of the absorbed component
  // whenever a joining edge is inconsistent.
  std::vector<int> color = best_color;
  std::vector<int> comp(nodes);
  std::iota(comp.begin(), comp.end(), 0);
  auto consistent = [&](const Edge& edge) {
    return (color[edge.u] == color[edge.v]) == e.matches(edge);
  };
  std::vector<Edge> tree;
  auto join = [&](const Edge& edge, bool allow_flip) {
    const int a = comp[edge.u];
    const int b = comp[edge.v];
    if (a == b) return;
    if (!consistent(edge)) {
      if (!allow_flip) return;
      for (int v = 0; v < nodes; ++v)
        if (comp[v] == b) color[v] ^= 1;
    }
    for (int v = 0; v < nodes; ++v)
      if (comp[v] == b) comp[v] = a;
    tree.push_back(edge);
  };
  join(e.edge(), false);
  for (const auto& edge : g.edges())
    if (consistent(edge)) join(edge, false);
  for (const auto& edge : g.edges()) join(edge, true);
  std::sort(tree.begin(), tree.end());
  return tree;
}

std::pair<Cycle, Cycle> corank2_cycle_pair(const CellSubgraphs& sub, const ContractionEdge& e) {
  auto cycles = all_cycles(sub.undirected);
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a.edges() < b.edges(); });
  for (const auto& second : cycles) {
    if (second.length() % 2 != 0 || second.contains(e.edge())) continue;
    for (const auto& first : cycles)
      if (!(first == second)) return {first, second};
  }
  throw NoValidCyclePair("no even cycle avoiding the contracted edge with a partner cycle");
}

std::pair<int, int> shared_orientations(const Cycle& along, const Cycle& other,
                                        const std::vector<DirectedEdge>& directed) {
  const auto other_edges = other.edges();
  int forward = 0, backward = 0;
  bool first_backward = false;
  bool seen_any = false;
  const std::size_t m = along.vertices.size();
  for (std::size_t i = 0; i < m; ++i) {
    const int u = along.vertices[i];
    const int w = along.vertices[(i + 1) % m];
    if (!std::binary_search(other_edges.begin(), other_edges.end(), Edge(u, w))) continue;
    const bool fwd = std::binary_search(directed.begin(), directed.end(), DirectedEdge{u, w});
    const bool bwd = std::binary_search(directed.begin(), directed.end(), DirectedEdge{w, u});
    if (fwd) ++forward;
    if (bwd) ++backward;
    if (!seen_any) {
      seen_any = true;
      first_backward = bwd && !fwd;
    }
  }
  // Orient the traversal so the first shared edge counts as forward.
  if (first_backward) std::swap(forward, backward);
  return {forward, backward};
}

VolumeClosedForm cell_volume_closed_form(const Cell& cell, const ContractionEdge& e) {
  VolumeClosedForm out;
  out.corank = subset_corank(cell.points, e);
  const auto sub = cell_subgraphs(cell.points);
  switch (out.corank) {
    case 0:
      out.value = 2;
      return out;
    case 1:
      out.m1 = circumference(sub.undirected);
      out.value = out.m1;
      return out;
    case 2: {
      const auto [first, second] = corank2_cycle_pair(sub, e);
      out.first = first;
      out.second = second;
      out.m1 = static_cast<int>(first.length());
      out.m2 = static_cast<int>(second.length());
      std::tie(out.gamma, out.delta) = shared_orientations(second, first, sub.directed);
      out.value = BigInt(out.m1 * out.m2 / 2 - 2 * out.gamma * out.delta);
      return out;
    }
    default:
      throw UnsupportedCorank("no closed form for corank " + std::to_string(out.corank));
  }
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::kTree: return "tree";
    case GraphKind::kEvenCycle: return "even_cycle";
    case GraphKind::kOddCycle: return "odd_cycle";
    default: return "other";
  }
}

GraphKind graph_kind(const Graph& g) {
  if (!g.is_connected()) return GraphKind::kOther;
  const int nodes = g.node_count();
  if (static_cast<int>(g.edge_count()) == nodes - 1) return GraphKind::kTree;
  if (nodes >= 3 && static_cast<int>(g.edge_count()) == nodes) {
    bool all_two = true;
    for (int v = 0; v < nodes; ++v) all_two = all_two && g.neighbors(v).size() == 2;
    if (all_two) return nodes % 2 == 0 ? GraphKind::kEvenCycle : GraphKind::kOddCycle;
  }
  return GraphKind::kOther;
}

SpecialGraphReport classify_special_graphs(const Graph& g, const ContractionEdge& e,
                                           const std::vector<Cell>& cells) {
  SpecialGraphReport r;
  r.kind = graph_kind(g);
  const int n = g.dimension();
  for (const auto& cell : cells) {
    bool ok = true;
    switch (r.kind) {
      case GraphKind::kTree:
      case GraphKind::kEvenCycle:
        ok = is_simplicial(cell, n);
        break;
      case GraphKind::kOddCycle:
        ok = subset_is_circuit(cell.points, e);
        break;
      default:
        break;
    }
    if (!ok) ++r.violations;
  }
  r.holds = r.violations == 0;
  return r;
}

}  // namespace apx
