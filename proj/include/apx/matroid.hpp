#pragma once

// The point matroid on the grouped ground set of a cell, the graphic matroid
// of its undirected cell subgraph, and the exhaustive check that the map
// X -> G_X preserves bases, circuits, dependence and rank.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "apx/graph.hpp"
#include "apx/subdivision.hpp"

namespace apx {

/// Bit i selects ground element i.
using SubsetMask = std::uint32_t;

/// Largest ground set accepted by the exhaustive routines.
inline constexpr std::size_t kMaxGroundSize = 20;

/// Singletons for the ordinary points of a cell plus one element holding both
/// contracted points. Elements follow the order of their undirected edges.
struct GroupedGroundSet {
  ContractionEdge edge;
  std::vector<std::vector<DirectedEdge>> elements;
  /// The undirected edge of each element (the map f on singletons).
  std::vector<Edge> images;

  static GroupedGroundSet build(const Cell& cell, const ContractionEdge& e);

  std::size_t size() const { return elements.size(); }
  std::size_t grouped_index() const;
  /// Union of the selected elements.
  std::vector<DirectedEdge> points(SubsetMask mask) const;
  std::vector<Edge> image(SubsetMask mask) const;
};

/// A matroid given by an independence oracle, tabulated over every subset.
/// rank(X) is the size of a largest independent subset of X.
class MatroidView {
 public:
  MatroidView(std::size_t ground_size, const std::function<bool(SubsetMask)>& independent);

  std::size_t ground_size() const { return ground_size_; }
  SubsetMask full() const { return static_cast<SubsetMask>((1ull << ground_size_) - 1); }
  bool independent(SubsetMask x) const { return independent_[x] != 0; }
  int rank(SubsetMask x) const { return rank_[x]; }
  bool is_basis(SubsetMask x) const { return independent(x) && rank(x) == rank(full()); }
  /// Dependent, and independent after removing any one element.
  bool is_circuit(SubsetMask x) const;
  std::size_t basis_count() const;

 private:
  std::size_t ground_size_;
  std::vector<char> independent_;
  std::vector<int> rank_;
};

/// Independence is affine independence of the union of the grouped elements.
MatroidView point_matroid(const GroupedGroundSet& ground, int dim);
MatroidView point_matroid(const Cell& cell, const ContractionEdge& e, int dim);
/// Independence is acyclicity of the edge set. Ground order follows ground.images.
MatroidView graphic_matroid(const GroupedGroundSet& ground);
MatroidView graphic_matroid(const Cell& cell, const ContractionEdge& e);

struct AxiomReport {
  bool empty_independent = false;
  bool downward_closed = false;
  /// r(X) <= r(X+a) <= r(X)+1, and r(X+a) = r(X+b) = r(X) implies r(X+a+b) = r(X).
  bool rank_axioms = false;

  bool passed() const { return empty_independent && downward_closed && rank_axioms; }
};

AxiomReport check_axioms(const MatroidView& m);

struct MorphismReport {
  std::size_t ground_size = 0;
  std::size_t subsets_checked = 0;
  bool bases = true;
  bool circuits = true;
  bool dependence = true;
  bool ranks = true;
  /// Graphic circuits are exactly the edge sets forming one cycle.
  bool graphic_circuits_are_cycles = true;
  AxiomReport point_axioms;
  AxiomReport graphic_axioms;
  int point_rank = 0;
  int graphic_rank = 0;
  int dim = 0;
  int cell_subgraph_nodes = 0;
  std::size_t point_bases = 0;
  /// Spanning trees of G_C, counted by enumerating edge subsets.
  std::size_t spanning_trees = 0;
  /// Description of the first failing subset, if any.
  std::string first_violation;

  bool passed() const {
    return bases && circuits && dependence && ranks && graphic_circuits_are_cycles &&
           point_axioms.passed() && graphic_axioms.passed() && point_rank == dim &&
           graphic_rank == cell_subgraph_nodes - 1 && point_bases == spanning_trees;
  }
};

/// Exhaustive comparison over all subsets of the grouped ground set.
/// Throws PreconditionViolated when the ground set exceeds kMaxGroundSize.
MorphismReport morphism_report(const Cell& cell, const ContractionEdge& e, int dim);
/// As morphism_report, but throws MorphismViolation on any failure.
MorphismReport verify_morphism(const Cell& cell, const ContractionEdge& e, int dim);

}  // namespace apx
