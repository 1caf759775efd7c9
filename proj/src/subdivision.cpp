#include "apx/subdivision.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "apx/errors.hpp"
#include "apx/hull.hpp"

namespace apx {

namespace {

std::string label_str(const DirectedEdge& d) {
  return "(" + std::to_string(d.from) + "," + std::to_string(d.to) + ")";
}

std::string labels_str(const std::vector<DirectedEdge>& ds) {
  std::string s = "{";
  for (std::size_t i = 0; i < ds.size(); ++i) s += (i ? "," : "") + label_str(ds[i]);
  return s + "}";
}

// The lift is affine on the configuration: one cell containing everything.
Cell single_cell(const PointConfiguration& config, const std::vector<Rational>& weights) {
  // Solve <x, gamma> - h = -omega(x) on an affine basis.
  std::vector<ExactVector> rows;
  ExactVector rhs;
  std::vector<IntVector> chosen;
  for (std::size_t k = 0; k < config.size() && rows.size() < static_cast<std::size_t>(config.dim) + 1;
       ++k) {
    chosen.push_back(config.points[k]);
    if (affine_dimension(chosen) != static_cast<int>(chosen.size()) - 1) {
      chosen.pop_back();
      continue;
    }
    ExactVector row = to_exact(config.points[k]);
    row.push_back(-1);
    rows.push_back(row);
    rhs.push_back(-weights[k]);
  }
  const ExactVector sol = solve_unique(ExactMatrix(rows), rhs);
  Cell cell;
  cell.gamma.assign(sol.begin(), sol.end() - 1);
  cell.h = sol.back();
  cell.points = config.labels;
  return cell;
}

}  // namespace

std::vector<long long> Lift::weights(const PointConfiguration& config) const {
  std::vector<long long> w;
  for (const auto& l : config.labels) w.push_back(weight(l));
  return w;
}

bool Cell::contains(const DirectedEdge& d) const {
  return std::binary_search(points.begin(), points.end(), d);
}

Rational node_value(const ExactVector& normal, int node) {
  return node == 0 ? Rational(0) : normal[node - 1];
}

std::vector<Cell> regular_subdivision(const PointConfiguration& config,
                                      const std::vector<Rational>& weights) {
  if (weights.size() != config.size())
    throw std::invalid_argument("one weight per configuration point required");
  if (config.dim == 0) throw NotFullDimensional("empty configuration");
  if (affine_dimension(config.points) != config.dim)
    throw NotFullDimensional("configuration is not full-dimensional");

  BigInt scale = 1;
  for (const auto& w : weights)
    scale = boost::multiprecision::lcm(scale, BigInt(denominator(w)));
  std::vector<IntVector> lifted;
  for (std::size_t k = 0; k < config.size(); ++k) {
    IntVector row = config.points[k];
    row.push_back(static_cast<long long>(BigInt(numerator(weights[k]) * (scale / denominator(weights[k])))));
    lifted.push_back(std::move(row));
  }
  if (affine_dimension(lifted) == config.dim) return {single_cell(config, weights)};

  std::vector<Cell> cells;
  for (const auto& f : hull_facets(lifted)) {
    // <x, a> + t * scale * omega + b >= 0; lower facets have t > 0.
    const Rational t(f.ray[config.dim]);
    if (t <= 0) continue;
    const Rational factor = t * Rational(scale);
    Cell cell;
    for (int i = 0; i < config.dim; ++i) cell.gamma.push_back(Rational(f.ray[i]) / factor);
    cell.h = -Rational(f.ray.back()) / factor;
    for (std::size_t k = 0; k < config.size(); ++k)
      if (f.tight.test(k)) cell.points.push_back(config.labels[k]);
    cells.push_back(std::move(cell));
  }
  std::sort(cells.begin(), cells.end(),
            [](const Cell& a, const Cell& b) { return lex_less(a.gamma, b.gamma); });
  return cells;
}

std::vector<Cell> edge_contraction_subdivision(const Graph& g, const ContractionEdge& e) {
  g.require_edge(e);
  const auto config = PointConfiguration::build(g);
  const Lift lift{e};
  std::vector<Rational> w;
  for (auto x : lift.weights(config)) w.emplace_back(x);
  return regular_subdivision(config, w);
}

CellCheck check_cell(const PointConfiguration& config, const ContractionEdge& e, const Cell& cell) {
  const Lift lift{e};
  CellCheck check;
  check.contains_pair = cell.contains({e.k1, e.k2}) && cell.contains({e.k2, e.k1});
  check.h_zero = cell.h == 0;
  check.gamma_equal = node_value(cell.gamma, e.k1) == node_value(cell.gamma, e.k2);
  check.support_values = true;
  check.strict_outside = true;
  for (std::size_t k = 0; k < config.size(); ++k) {
    const Rational v = dot(config.points[k], cell.gamma);
    const long long w = lift.weight(config.labels[k]);
    if (cell.contains(config.labels[k])) {
      if (v + w != cell.h || (w == 1 && v != -1)) check.support_values = false;
    } else if (v + w <= cell.h) {
      check.strict_outside = false;
    }
  }
  check.full_dimensional = affine_dimension(config.points_of(cell.points)) == config.dim;
  return check;
}

bool is_simplicial(const Cell& cell, int dim) {
  return static_cast<int>(cell.points.size()) == dim + 1;
}

std::optional<DirectedEdge> project_label(const DirectedEdge& d, const std::vector<int>& node_map) {
  const int a = node_map[d.from];
  const int b = node_map[d.to];
  if (a == b) return std::nullopt;
  return DirectedEdge{a, b};
}

namespace {

std::vector<DirectedEdge> projected_support(const Cell& cell, const std::vector<int>& node_map) {
  std::set<DirectedEdge> out;
  for (const auto& d : cell.points)
    if (auto p = project_label(d, node_map)) out.insert(*p);
  return {out.begin(), out.end()};
}

std::size_t find_facet(const std::vector<FacetCertificate>& facets,
                       const std::vector<DirectedEdge>& support, std::size_t cell_index) {
  std::size_t found = facets.size();
  for (std::size_t f = 0; f < facets.size(); ++f) {
    if (facets[f].support != support) continue;
    if (found != facets.size())
      throw CorrespondenceViolation("two facets share support " + labels_str(support));
    found = f;
  }
  if (found == facets.size())
    throw CorrespondenceViolation("projection " + labels_str(support) + " of cell " +
                                  std::to_string(cell_index) + " is not a facet");
  return found;
}

}  // namespace

Correspondence facet_correspondence(const Graph& g, const ContractionEdge& e,
                                    const std::vector<Cell>& cells) {
  Correspondence out;
  out.contraction = contract_edge(g, e);
  out.facets = enumerate_facets(PointConfiguration::build(out.contraction.graph));
  std::vector<bool> hit(out.facets.size(), false);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const std::size_t f = find_facet(out.facets, projected_support(cells[c], out.contraction.node_map), c);
    if (hit[f])
      throw CorrespondenceViolation("facet " + std::to_string(f) + " is the image of two cells");
    hit[f] = true;
    for (int v = 0; v < g.node_count(); ++v) {
      const int w = out.contraction.node_map[v];
      if (node_value(cells[c].gamma, v) != node_value(out.facets[f].normal, w))
        throw CorrespondenceViolation("cell " + std::to_string(c) +
                                      " normal does not restrict to its facet normal at node " +
                                      std::to_string(v));
    }
    out.image.push_back(f);
  }
  if (cells.size() != out.facets.size())
    throw CorrespondenceViolation(std::to_string(cells.size()) + " cells but " +
                                  std::to_string(out.facets.size()) + " facets");
  return out;
}

SharedEdgeDecomposition decompose_at_edge(const Graph& g, const ContractionEdge& e) {
  g.require_edge(e);
  // Components of G - {k1, k2}; the first one (by smallest node) forms the first part.
  std::vector<int> comp(g.node_count(), -1);
  int first_root = -1;
  for (int s = 0; s < g.node_count() && first_root < 0; ++s) {
    if (s == e.k1 || s == e.k2) continue;
    first_root = s;
    std::vector<int> stack{s};
    comp[s] = 0;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbors(x)) {
        if (y == e.k1 || y == e.k2 || comp[y] >= 0) continue;
        comp[y] = 0;
        stack.push_back(y);
      }
    }
  }
  SharedEdgeDecomposition parts;
  const Edge shared = e.edge();
  parts.first.push_back(shared);
  parts.second.push_back(shared);
  for (const auto& edge : g.edges()) {
    if (edge == shared) continue;
    const bool in_first = comp[edge.u] == 0 || comp[edge.v] == 0;
    (in_first ? parts.first : parts.second).push_back(edge);
  }
  std::sort(parts.first.begin(), parts.first.end());
  std::sort(parts.second.begin(), parts.second.end());
  return parts;
}

void validate_decomposition(const Graph& g, const ContractionEdge& e,
                            const SharedEdgeDecomposition& parts) {
  std::set<Edge> a(parts.first.begin(), parts.first.end());
  std::set<Edge> b(parts.second.begin(), parts.second.end());
  const Edge shared = e.edge();
  std::vector<Edge> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  if (both != std::vector<Edge>{shared})
    throw NotAValidSharedEdgeDecomposition("parts must share exactly the contracted edge");
  std::set<Edge> uni(a);
  uni.insert(b.begin(), b.end());
  if (std::vector<Edge>(uni.begin(), uni.end()) != g.edges())
    throw NotAValidSharedEdgeDecomposition("parts do not cover the edges of the graph");
  const auto va = touched_vertices(parts.first);
  const auto vb = touched_vertices(parts.second);
  std::vector<int> common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
  if (common != std::vector<int>{shared.u, shared.v})
    throw NotAValidSharedEdgeDecomposition("parts must share exactly the two endpoints");
}

namespace {

ContractedPart contract_part(const std::vector<Edge>& part, const std::vector<int>& node_map,
                             int contracted_nodes) {
  ContractedPart out;
  std::set<int> labels;
  std::set<Edge> edges;
  for (const auto& edge : part) {
    const int a = node_map[edge.u];
    const int b = node_map[edge.v];
    labels.insert(a);
    labels.insert(b);
    if (a != b) edges.insert(Edge(a, b));
  }
  out.local.assign(contracted_nodes, -1);
  int next = 0;
  for (int l : labels) out.local[l] = next++;
  std::vector<Edge> local_edges;
  for (const auto& edge : edges) local_edges.emplace_back(out.local[edge.u], out.local[edge.v]);
  out.graph = Graph(next, local_edges);
  out.facets = enumerate_facets(PointConfiguration::build(out.graph));
  return out;
}

std::vector<DirectedEdge> part_support(const Cell& cell, const std::set<Edge>& part_edges,
                                       const std::vector<int>& node_map,
                                       const ContractedPart& part) {
  std::set<DirectedEdge> out;
  for (const auto& d : cell.points) {
    if (!part_edges.count(d.undirected())) continue;
    if (auto p = project_label(d, node_map)) out.insert({part.local[p->from], part.local[p->to]});
  }
  return {out.begin(), out.end()};
}

}  // namespace

ProductCorrespondence product_correspondence(const Graph& g, const SharedEdgeDecomposition& parts,
                                             const ContractionEdge& e,
                                             const std::vector<Cell>& cells) {
  validate_decomposition(g, e, parts);
  ProductCorrespondence out;
  out.contraction = contract_edge(g, e);
  const int nodes = out.contraction.graph.node_count();
  out.first = contract_part(parts.first, out.contraction.node_map, nodes);
  out.second = contract_part(parts.second, out.contraction.node_map, nodes);
  const std::set<Edge> first_edges(parts.first.begin(), parts.first.end());
  const std::set<Edge> second_edges(parts.second.begin(), parts.second.end());

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto f1 = find_facet(out.first.facets,
                               part_support(cells[c], first_edges, out.contraction.node_map, out.first), c);
    const auto f2 = find_facet(out.second.facets,
                               part_support(cells[c], second_edges, out.contraction.node_map, out.second), c);
    if (!seen.insert({f1, f2}).second)
      throw CorrespondenceViolation("facet pair (" + std::to_string(f1) + "," +
                                    std::to_string(f2) + ") is the image of two cells");
    out.image.emplace_back(f1, f2);
  }
  const std::size_t expected = out.first.facets.size() * out.second.facets.size();
  if (cells.size() != expected)
    throw CorrespondenceViolation(std::to_string(cells.size()) + " cells but " +
                                  std::to_string(expected) + " facet pairs");
  return out;
}

bool check_simpliciality_transfer(const Cell& cell, int dim, const FacetCertificate& facet,
                                  int facet_dim) {
  return !is_simplicial(cell, dim) || is_simplicial(facet, facet_dim);
}

bool check_simpliciality_transfer(const Cell& cell, int dim, const ProductCorrespondence& pc,
                                  std::size_t cell_index) {
  if (!is_simplicial(cell, dim)) return true;
  const auto [f1, f2] = pc.image[cell_index];
  return is_simplicial(pc.first.facets[f1], pc.first.graph.dimension()) &&
         is_simplicial(pc.second.facets[f2], pc.second.graph.dimension());
}

}  // namespace apx
