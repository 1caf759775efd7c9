#pragma once

// Regular subdivisions from a lifting, the edge contraction subdivision, and
// the correspondences between its cells and facets of contracted graphs.

#include <utility>
#include <vector>

#include "apx/exactlin.hpp"
#include "apx/graph.hpp"
#include "apx/polytope.hpp"

namespace apx {

/// The 0/1 lift: 0 on the two points of the contracted edge, 1 elsewhere.
struct Lift {
  ContractionEdge edge;
  long long weight(const DirectedEdge& d) const { return edge.matches(d) ? 0 : 1; }
  std::vector<long long> weights(const PointConfiguration& config) const;
};

/// A cell: all configuration points on a lower supporting hyperplane
/// <x, gamma> + omega(x) = h of the lifted configuration.
struct Cell {
  std::vector<DirectedEdge> points;
  ExactVector gamma;
  Rational h;

  bool contains(const DirectedEdge& d) const;
  bool operator==(const Cell&) const = default;
};

/// Coordinate of a normal at a node, with node 0 fixed at 0.
Rational node_value(const ExactVector& normal, int node);

/// Lower cells of the lifted configuration, sorted lexicographically by gamma.
std::vector<Cell> regular_subdivision(const PointConfiguration& config,
                                      const std::vector<Rational>& weights);

/// Throws EdgeNotInGraph or DisconnectedGraph.
std::vector<Cell> edge_contraction_subdivision(const Graph& g, const ContractionEdge& e);

struct CellCheck {
  bool contains_pair = false;
  bool h_zero = false;
  bool gamma_equal = false;
  bool support_values = false;
  bool strict_outside = false;
  bool full_dimensional = false;

  bool passed() const {
    return contains_pair && h_zero && gamma_equal && support_values && strict_outside &&
           full_dimensional;
  }
};

CellCheck check_cell(const PointConfiguration& config, const ContractionEdge& e, const Cell& cell);

bool is_simplicial(const Cell& cell, int dim);

/// Image of a cell point in the contracted graph; nullopt for the contracted pair.
std::optional<DirectedEdge> project_label(const DirectedEdge& d, const std::vector<int>& node_map);

struct Correspondence {
  Contraction contraction;
  std::vector<FacetCertificate> facets;
  /// image[c] is the facet index of cell c.
  std::vector<std::size_t> image;
};

/// Maps each cell to the facet of the contracted graph's polytope whose
/// support is the cell's nonzero projection, and checks that the map is a
/// bijection and that gamma restricts to that facet's normal.
/// Throws CorrespondenceViolation.
Correspondence facet_correspondence(const Graph& g, const ContractionEdge& e,
                                    const std::vector<Cell>& cells);

struct SharedEdgeDecomposition {
  std::vector<Edge> first;
  std::vector<Edge> second;
};

/// Splits G along the separating pair {k1, k2}: the first part is one
/// component of G - {k1, k2} with its attaching edges, the second part the
/// rest; both contain the edge itself. The second part is just the edge when
/// nothing else remains.
SharedEdgeDecomposition decompose_at_edge(const Graph& g, const ContractionEdge& e);

/// Throws NotAValidSharedEdgeDecomposition unless the parts share exactly
/// the edge and its endpoints and cover G.
void validate_decomposition(const Graph& g, const ContractionEdge& e,
                            const SharedEdgeDecomposition& parts);

/// A part contracted along e, relabelled to 0..m-1 in increasing order of the
/// contracted labels.
struct ContractedPart {
  Graph graph;
  /// Maps labels of G (after contraction) to local labels, -1 if absent.
  std::vector<int> local;
  std::vector<FacetCertificate> facets;
};

struct ProductCorrespondence {
  Contraction contraction;
  ContractedPart first;
  ContractedPart second;
  /// image[c] = (facet of first, facet of second).
  std::vector<std::pair<std::size_t, std::size_t>> image;
};

/// Throws NotAValidSharedEdgeDecomposition or CorrespondenceViolation.
ProductCorrespondence product_correspondence(const Graph& g, const SharedEdgeDecomposition& parts,
                                             const ContractionEdge& e,
                                             const std::vector<Cell>& cells);

/// Simplicial cell implies simplicial image facet(s).
bool check_simpliciality_transfer(const Cell& cell, int dim, const FacetCertificate& facet,
                                  int facet_dim);
bool check_simpliciality_transfer(const Cell& cell, int dim, const ProductCorrespondence& pc,
                                  std::size_t cell_index);

}  // namespace apx
