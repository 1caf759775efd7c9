#pragma once

// Combinatorics of cells: cell subgraphs, their structural properties,
// affine structure of subsets, signatures, maximum corank and cell volumes.

#include <optional>
#include <string>
#include <vector>

#include "apx/exactlin.hpp"
#include "apx/graph.hpp"
#include "apx/subdivision.hpp"

namespace apx {

struct CellSubgraphs {
  /// Sorted directed edges (i,j) with e_i - e_j in X.
  std::vector<DirectedEdge> directed;
  /// Sorted undirected edges; the contracted pair contributes one edge.
  std::vector<Edge> undirected;
};

CellSubgraphs cell_subgraphs(const std::vector<DirectedEdge>& points);

/// Swaps k1 and k2 in a directed edge when the swapped edge exists in G.
DirectedEdge psi(const DirectedEdge& d, const ContractionEdge& e, const Graph& g);

struct CellInvariantReport {
  int corank = 0;
  int cyclomatic = 0;
  bool simplicial = false;
  bool circuit = false;
  bool spanning_tree = false;
  bool chordless_cycle = false;

  bool unique_directed_cycle = false;  // only k1 <-> k2
  bool spanning = false;               // both subgraphs cover V(G)
  bool psi_closed = false;
  bool balanced = false;
  int odd_basis_cycles = 0;
  bool at_most_one_odd = false;

  bool corank_is_cyclomatic = false;
  bool simplicial_iff_tree = false;
  bool circuit_iff_cycle = false;

  BigInt oracle_volume = 0;
  std::optional<BigInt> closed_form_volume;
  bool volume_matches = true;

  bool properties_hold() const {
    return unique_directed_cycle && spanning && psi_closed && balanced && at_most_one_odd;
  }
  bool passed() const {
    return properties_hold() && corank_is_cyclomatic && simplicial_iff_tree && circuit_iff_cycle &&
           volume_matches;
  }
};

/// Runs every per-cell check. Volumes are computed for corank <= 2 against
/// the triangulation oracle; `with_volume = false` skips both.
CellInvariantReport verify_cell_properties(const Graph& g, const ContractionEdge& e,
                                           const Cell& cell, bool with_volume = true);

/// Facts about a point subset, from both linear algebra and its graph.
struct SubsetAnalysis {
  std::vector<Edge> graph;
  int affine_dim = -1;
  int corank = 0;
  bool independent = true;
  bool circuit = false;
  // Predictions from the graph alone.
  bool forest = true;
  bool single_cycle = false;
  int predicted_dim = -1;
  int cyclomatic = 0;
};

/// Throws PreconditionViolated when X holds exactly one of the contracted pair.
void require_pairing(const std::vector<DirectedEdge>& points, const ContractionEdge& e);

SubsetAnalysis analyze_subset(const std::vector<DirectedEdge>& points, const ContractionEdge& e);
bool subset_is_affinely_independent(const std::vector<DirectedEdge>& points,
                                    const ContractionEdge& e);
bool subset_is_circuit(const std::vector<DirectedEdge>& points, const ContractionEdge& e);
int subset_dimension(const std::vector<DirectedEdge>& points, const ContractionEdge& e);
int subset_corank(const std::vector<DirectedEdge>& points, const ContractionEdge& e);

struct Signature {
  int plus = 0;
  int minus = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
};

struct SignatureResult {
  Signature computed;
  Signature closed_form;
  /// Dependence coefficients in the order of the input points.
  ExactVector coefficients;
  /// When the circuit contains the contracted pair, whether their
  /// coefficients have opposite signs; true when it does not.
  bool pair_opposite = true;
};

/// Throws NotCorankOne.
SignatureResult signature_of_corank1(const std::vector<DirectedEdge>& points,
                                     const ContractionEdge& e);

struct MaxCorank {
  int corank = 0;
  std::size_t witness = 0;
};

/// Largest corank over the given cells, with the first cell attaining it.
MaxCorank max_corank(const std::vector<Cell>& cells, const ContractionEdge& e);

/// The alternating point set built from a spanning tree through e.
/// Throws TreeMissingContractedEdge, or PreconditionViolated if T is not a spanning tree.
std::vector<DirectedEdge> build_alternating_basis(const Graph& g, const ContractionEdge& e,
                                                  const std::vector<Edge>& tree);

/// The unique cell of the subdivision containing an alternating basis, found
/// from the normal solving <x, gamma> = -omega(x) on the basis.
Cell complete_basis(const Graph& g, const ContractionEdge& e,
                    const std::vector<DirectedEdge>& basis);

/// Number of non-tree edges of G whose fundamental cycle is balanced.
int balanced_fundamental_cycles(const Graph& g, const ContractionEdge& e,
                                const std::vector<Edge>& tree);

/// A spanning tree through e with the largest number of balanced
/// fundamental cycles.
std::vector<Edge> max_balanced_tree(const Graph& g, const ContractionEdge& e);

struct VolumeClosedForm {
  int corank = 0;
  BigInt value = 0;
  int m1 = 0;
  int m2 = 0;
  int gamma = 0;
  int delta = 0;
  std::optional<Cycle> first;
  std::optional<Cycle> second;
};

/// The pair of cycles used for corank 2: the second is even and avoids e.
/// Throws NoValidCyclePair.
std::pair<Cycle, Cycle> corank2_cycle_pair(const CellSubgraphs& sub, const ContractionEdge& e);

/// Counts shared edges traversed forwards and backwards along `along`,
/// reading each edge's direction from the directed cell subgraph.
std::pair<int, int> shared_orientations(const Cycle& along, const Cycle& other,
                                        const std::vector<DirectedEdge>& directed);

/// Throws UnsupportedCorank for corank >= 3, NoValidCyclePair.
VolumeClosedForm cell_volume_closed_form(const Cell& cell, const ContractionEdge& e);

enum class GraphKind { kTree, kEvenCycle, kOddCycle, kOther };
std::string to_string(GraphKind kind);
GraphKind graph_kind(const Graph& g);

struct SpecialGraphReport {
  GraphKind kind = GraphKind::kOther;
  /// Trees and even cycles: every cell simplicial. Odd cycles: every cell a
  /// circuit. Always true for other graphs.
  bool holds = true;
  std::size_t violations = 0;
};

SpecialGraphReport classify_special_graphs(const Graph& g, const ContractionEdge& e,
                                           const std::vector<Cell>& cells);

}  // namespace apx
