#pragma once

// Brute-force reference computations used only by the test suites. They
// deliberately share no algorithmic code with the library routines they check.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "apx/exactlin.hpp"
#include "apx/graph.hpp"
#include "apx/polytope.hpp"
#include "apx/subdivision.hpp"

namespace oracles {

// Every simple cycle as a vertex sequence, found by trying all orderings of
// all vertex subsets.
inline std::vector<std::vector<int>> naive_cycles(const std::vector<apx::Edge>& edges) {
  std::set<apx::Edge> present(edges.begin(), edges.end());
  std::vector<int> verts;
  for (const auto& e : edges) {
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const int k = static_cast<int>(verts.size());
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> chosen;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) chosen.push_back(verts[i]);
    if (chosen.size() < 3) continue;
    std::vector<int> rest(chosen.begin() + 1, chosen.end());
    do {
      if (rest.front() > rest.back()) continue;
      std::vector<int> seq{chosen.front()};
      seq.insert(seq.end(), rest.begin(), rest.end());
      bool ok = true;
      for (std::size_t i = 0; i < seq.size() && ok; ++i)
        ok = present.count(apx::Edge(seq[i], seq[(i + 1) % seq.size()])) > 0;
      if (ok) out.push_back(seq);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return out;
}

inline int naive_cyclomatic(const std::vector<apx::Edge>& edges) {
  // Rank of the cycle space = |E| minus the size of a spanning forest,
  // computed here by repeated reachability rather than union-find.
  std::vector<apx::Edge> forest;
  for (const auto& e : edges) {
    std::set<int> reach{e.u};
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& f : forest) {
        const bool has_u = reach.count(f.u) > 0;
        const bool has_v = reach.count(f.v) > 0;
        if (has_u != has_v) {
          reach.insert(has_u ? f.v : f.u);
          grew = true;
        }
      }
    }
    if (!reach.count(e.v)) forest.push_back(e);
  }
  return static_cast<int>(edges.size() - forest.size());
}

// Maximum cycle-space rank over all edge subsets whose every cycle has an
// even number of edges other than the contracted one.
inline int brute_balanced_circuit_rank(const apx::Graph& g, const apx::ContractionEdge& ce) {
  const auto& all = g.edges();
  const std::size_t m = all.size();
  int best = 0;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::vector<apx::Edge> sub;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1ul << i)) sub.push_back(all[i]);
    const int mu = naive_cyclomatic(sub);
    if (mu <= best) continue;
    bool balanced = true;
    for (const auto& cyc : naive_cycles(sub)) {
      int other = 0;
      for (std::size_t i = 0; i < cyc.size(); ++i)
        if (apx::Edge(cyc[i], cyc[(i + 1) % cyc.size()]) != ce.edge()) ++other;
      if (other % 2) {
        balanced = false;
        break;
      }
    }
    if (balanced) best = mu;
  }
  return best;
}

// Facets of a configuration with the origin in its interior, by trying every
// dim-subset of points as a candidate supporting hyperplane <x, a> = -1.
inline std::vector<apx::FacetCertificate> brute_force_facets(const apx::PointConfiguration& c) {
  std::map<std::vector<apx::Rational>, std::vector<apx::DirectedEdge>> found;
  const std::size_t n = static_cast<std::size_t>(c.dim);
  const std::size_t m = c.size();
  std::vector<std::size_t> idx(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
    if (depth == n) {
      std::vector<apx::IntVector> rows;
      for (auto i : idx) rows.push_back(c.points[i]);
      const auto mat = apx::ExactMatrix::from_integers(rows);
      if (apx::rank(mat) != n) return;
      const auto a = apx::solve_unique(mat, apx::ExactVector(n, apx::Rational(-1)));
      std::vector<apx::DirectedEdge> support;
      for (std::size_t k = 0; k < m; ++k) {
        const auto v = apx::dot(c.points[k], a);
        if (v < -1) return;
        if (v == -1) support.push_back(c.labels[k]);
      }
      found[a] = support;
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      idx[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
  std::vector<apx::FacetCertificate> out;
  for (auto& [normal, support] : found) out.push_back({normal, support});
  return out;
}

// Subdivides a cell by lifting a single point `a` to height 1 and returns the
// subcells (as point-label sets of the cell).
inline std::vector<apx::Cell> interior_lift_subcells(const std::vector<apx::DirectedEdge>& cell,
                                                     int dim, const apx::DirectedEdge& a) {
  apx::PointConfiguration sub;
  sub.dim = dim;
  sub.labels = cell;
  for (const auto& d : cell) sub.points.push_back(apx::phi(d, dim));
  std::vector<apx::Rational> w;
  for (const auto& d : cell) w.emplace_back(d == a ? 1 : 0);
  return apx::regular_subdivision(sub, w);
}

// Spanning trees of a connected edge set by the matrix-tree theorem.
inline apx::BigInt kirchhoff_tree_count(const std::vector<apx::Edge>& edges) {
  const auto nodes = apx::touched_vertices(edges);
  if (nodes.size() <= 1) return 1;
  const auto index = [&](int v) {
    return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
  };
  const std::size_t m = nodes.size() - 1;
  std::vector<apx::IntVector> lap(m, apx::IntVector(m, 0));
  for (const auto& e : edges) {
    const std::size_t a = index(e.u), b = index(e.v);
    // Drop the row and column of nodes[0].
    if (a > 0) lap[a - 1][a - 1] += 1;
    if (b > 0) lap[b - 1][b - 1] += 1;
    if (a > 0 && b > 0) {
      lap[a - 1][b - 1] -= 1;
      lap[b - 1][a - 1] -= 1;
    }
  }
  return apx::integer_determinant(lap);
}

}  // namespace oracles
