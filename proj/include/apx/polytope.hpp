#pragma once

// The adjacency polytope of a graph as a labelled point configuration,
// its facets, and normalized volume via a placing triangulation.

#include <optional>
#include <vector>

#include "apx/exactlin.hpp"
#include "apx/graph.hpp"

namespace apx {

/// phi((i,j)) = e_i - e_j in R^dim, with e_0 = 0.
IntVector phi(const DirectedEdge& d, int dim);

struct PointConfiguration {
  int dim = 0;
  /// Sorted; both orientations of every edge.
  std::vector<DirectedEdge> labels;
  /// points[k] = phi(labels[k]).
  std::vector<IntVector> points;

  /// Throws DisconnectedGraph. The one-node graph gives the empty configuration in R^0.
  static PointConfiguration build(const Graph& g);

  std::size_t size() const { return labels.size(); }
  std::optional<std::size_t> index_of(const DirectedEdge& d) const;
  std::vector<IntVector> points_of(const std::vector<DirectedEdge>& subset) const;
};

struct FacetCertificate {
  /// Inner normal with <x, normal> = -1 on the support and >= -1 everywhere.
  ExactVector normal;
  /// Sorted labels of the points on the facet.
  std::vector<DirectedEdge> support;

  bool operator==(const FacetCertificate&) const = default;
};

/// All facets, sorted lexicographically by normal. For dim = 0 the single
/// facet is the empty face. Throws NotFullDimensional.
std::vector<FacetCertificate> enumerate_facets(const PointConfiguration& config);

/// Re-checks a certificate from its definition: support values -1, all other
/// values > -1, and the support spans R^dim linearly.
bool validate_facet(const PointConfiguration& config, const FacetCertificate& facet);

/// A facet is simplicial when its support has exactly dim points.
bool is_simplicial(const FacetCertificate& facet, int dim);

/// Placing triangulation in input order: each simplex as dim+1 point indices.
/// Throws NotFullDimensional.
std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVector>& points);

/// dim! * Euclidean volume of conv(points). Throws NotFullDimensional.
BigInt normalized_volume(const std::vector<IntVector>& points);
BigInt normalized_volume(const PointConfiguration& config);

inline PointConfiguration build_configuration(const Graph& g) { return PointConfiguration::build(g); }
/// nvol of the convex hull of the labelled points of config.
inline BigInt normalized_volume_of_cell(const PointConfiguration& config,
                                        const std::vector<DirectedEdge>& points) {
  return normalized_volume(config.points_of(points));
}

}  // namespace apx
