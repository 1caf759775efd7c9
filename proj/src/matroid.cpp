#include "apx/matroid.hpp"

#include <algorithm>
#include <bit>

#include "apx/errors.hpp"
#include "apx/polytope.hpp"

namespace apx {

GroupedGroundSet GroupedGroundSet::build(const Cell& cell, const ContractionEdge& e) {
  GroupedGroundSet g;
  g.edge = e;
  std::vector<std::pair<Edge, std::vector<DirectedEdge>>> items;
  std::vector<DirectedEdge> pair;
  for (const auto& d : cell.points) {
    if (e.matches(d)) {
      pair.push_back(d);
    } else {
      items.push_back({d.undirected(), {d}});
    }
  }
  if (pair.size() != 2) throw PreconditionViolated("cell does not contain both contracted points");
  items.push_back({e.edge(), pair});
  std::sort(items.begin(), items.end());
  for (auto& [edge, pts] : items) {
    g.images.push_back(edge);
    g.elements.push_back(std::move(pts));
  }
  for (std::size_t i = 1; i < g.images.size(); ++i)
    if (g.images[i] == g.images[i - 1])
      throw PreconditionViolated("two cell points on one undirected edge besides the contracted pair");
  return g;
}

std::size_t GroupedGroundSet::grouped_index() const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].size() == 2) return i;
  return elements.size();
}

std::vector<DirectedEdge> GroupedGroundSet::points(SubsetMask mask) const {
  std::vector<DirectedEdge> out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (mask >> i & 1u) out.insert(out.end(), elements[i].begin(), elements[i].end());
  return out;
}

std::vector<Edge> GroupedGroundSet::image(SubsetMask mask) const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < images.size(); ++i)
    if (mask >> i & 1u) out.push_back(images[i]);
  return out;
}

MatroidView::MatroidView(std::size_t ground_size,
                         const std::function<bool(SubsetMask)>& independent)
    : ground_size_(ground_size) {
  if (ground_size > kMaxGroundSize)
    throw PreconditionViolated("ground set of size " + std::to_string(ground_size) +
                               " is too large for exhaustive enumeration");
  const std::size_t total = std::size_t{1} << ground_size;
  independent_.resize(total);
  rank_.resize(total);
  for (std::size_t x = 0; x < total; ++x) {
    const auto mask = static_cast<SubsetMask>(x);
    independent_[x] = independent(mask) ? 1 : 0;
    if (independent_[x]) {
      rank_[x] = std::popcount(mask);
      continue;
    }
    int best = 0;
    for (std::size_t i = 0; i < ground_size; ++i)
      if (mask >> i & 1u) best = std::max(best, rank_[mask & ~(SubsetMask{1} << i)]);
    rank_[x] = best;
  }
}

bool MatroidView::is_circuit(SubsetMask x) const {
  if (independent(x)) return false;
  for (std::size_t i = 0; i < ground_size_; ++i)
    if ((x >> i & 1u) && !independent(x & ~(SubsetMask{1} << i))) return false;
  return true;
}

std::size_t MatroidView::basis_count() const {
  std::size_t count = 0;
  for (SubsetMask x = 0; x <= full(); ++x) {
    if (is_basis(x)) ++count;
    if (x == full()) break;
  }
  return count;
}

MatroidView point_matroid(const GroupedGroundSet& ground, int dim) {
  return MatroidView(ground.size(), [&](SubsetMask mask) {
    const auto pts = ground.points(mask);
    std::vector<IntVector> coords;
    coords.reserve(pts.size());
    for (const auto& d : pts) coords.push_back(phi(d, dim));
    return affine_dimension(coords) == static_cast<int>(coords.size()) - 1;
  });
}

MatroidView point_matroid(const Cell& cell, const ContractionEdge& e, int dim) {
  return point_matroid(GroupedGroundSet::build(cell, e), dim);
}

MatroidView graphic_matroid(const GroupedGroundSet& ground) {
  return MatroidView(ground.size(), [&](SubsetMask mask) { return is_forest(ground.image(mask)); });
}

MatroidView graphic_matroid(const Cell& cell, const ContractionEdge& e) {
  return graphic_matroid(GroupedGroundSet::build(cell, e));
}

AxiomReport check_axioms(const MatroidView& m) {
  AxiomReport r;
  r.empty_independent = m.independent(0);
  r.downward_closed = true;
  r.rank_axioms = true;
  const std::size_t n = m.ground_size();
  for (SubsetMask x = 0;; ++x) {
    for (std::size_t i = 0; i < n; ++i) {
      const SubsetMask bit = SubsetMask{1} << i;
      if ((x & bit) && m.independent(x) && !m.independent(x & ~bit)) r.downward_closed = false;
      if (x & bit) continue;
      const int ra = m.rank(x | bit);
      if (ra < m.rank(x) || ra > m.rank(x) + 1) r.rank_axioms = false;
      for (std::size_t j = i + 1; j < n; ++j) {
        const SubsetMask bit2 = SubsetMask{1} << j;
        if (x & bit2) continue;
        if (ra == m.rank(x) && m.rank(x | bit2) == m.rank(x) && m.rank(x | bit | bit2) != m.rank(x))
          r.rank_axioms = false;
      }
    }
    if (x == m.full()) break;
  }
  return r;
}

namespace {

std::string describe(const GroupedGroundSet& ground, SubsetMask mask) {
  std::string s = "{";
  bool first = true;
  for (const auto& d : ground.points(mask)) {
    if (!first) s += ",";
    first = false;
    s += "(" + std::to_string(d.from) + "," + std::to_string(d.to) + ")";
  }
  return s + "}";
}

bool forms_one_cycle(const std::vector<Edge>& edges) {
  try {
    as_cycle(edges);
    return true;
  } catch (const NotACycle&) {
    return false;
  }
}

}  // namespace

MorphismReport morphism_report(const Cell& cell, const ContractionEdge& e, int dim) {
  const auto ground = GroupedGroundSet::build(cell, e);
  const auto pm = point_matroid(ground, dim);
  const auto gm = graphic_matroid(ground);

  MorphismReport r;
  r.ground_size = ground.size();
  r.dim = dim;
  r.cell_subgraph_nodes = static_cast<int>(touched_vertices(ground.images).size());
  r.point_axioms = check_axioms(pm);
  r.graphic_axioms = check_axioms(gm);
  r.point_rank = pm.rank(pm.full());
  r.graphic_rank = gm.rank(gm.full());

  const auto flag = [&](bool& field, SubsetMask x, const char* what) {
    field = false;
    if (r.first_violation.empty()) r.first_violation = std::string(what) + " at " + describe(ground, x);
  };
  for (SubsetMask x = 0;; ++x) {
    ++r.subsets_checked;
    if (pm.is_basis(x) != gm.is_basis(x)) flag(r.bases, x, "basis mismatch");
    if (pm.is_circuit(x) != gm.is_circuit(x)) flag(r.circuits, x, "circuit mismatch");
    if (pm.independent(x) != gm.independent(x)) flag(r.dependence, x, "dependence mismatch");
    if (pm.rank(x) != gm.rank(x)) flag(r.ranks, x, "rank mismatch");
    if (gm.is_circuit(x) != forms_one_cycle(ground.image(x)))
      flag(r.graphic_circuits_are_cycles, x, "graphic circuit is not a cycle");
    if (pm.is_basis(x)) ++r.point_bases;
    const auto edges = ground.image(x);
    if (static_cast<int>(edges.size()) == r.cell_subgraph_nodes - 1 && is_forest(edges))
      ++r.spanning_trees;
    if (x == pm.full()) break;
  }
  return r;
}

MorphismReport verify_morphism(const Cell& cell, const ContractionEdge& e, int dim) {
  auto r = morphism_report(cell, e, dim);
  if (!r.passed())
    throw MorphismViolation(r.first_violation.empty() ? "rank, axiom or basis count mismatch"
                                                      : r.first_violation);
  return r;
}

}  // namespace apx
