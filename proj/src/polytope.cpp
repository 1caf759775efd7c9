#include "apx/polytope.hpp"

#include <algorithm>
#include <map>

#include "apx/errors.hpp"
#include "apx/hull.hpp"

namespace apx {

IntVector phi(const DirectedEdge& d, int dim) {
  IntVector x(dim, 0);
  if (d.from > 0) x[d.from - 1] += 1;
  if (d.to > 0) x[d.to - 1] -= 1;
  return x;
}

PointConfiguration PointConfiguration::build(const Graph& g) {
  if (!g.is_connected()) throw DisconnectedGraph("graph is not connected");
  PointConfiguration c;
  c.dim = g.dimension();
  for (const auto& e : g.edges()) {
    c.labels.push_back({e.u, e.v});
    c.labels.push_back({e.v, e.u});
  }
  std::sort(c.labels.begin(), c.labels.end());
  for (const auto& l : c.labels) c.points.push_back(phi(l, c.dim));
  return c;
}

std::optional<std::size_t> PointConfiguration::index_of(const DirectedEdge& d) const {
  const auto it = std::lower_bound(labels.begin(), labels.end(), d);
  if (it == labels.end() || *it != d) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

std::vector<IntVector> PointConfiguration::points_of(
    const std::vector<DirectedEdge>& subset) const {
  std::vector<IntVector> out;
  out.reserve(subset.size());
  for (const auto& d : subset) out.push_back(phi(d, dim));
  return out;
}

std::vector<FacetCertificate> enumerate_facets(const PointConfiguration& config) {
  if (config.dim == 0) return {FacetCertificate{}};
  if (affine_dimension(config.points) != config.dim)
    throw NotFullDimensional("configuration does not span R^" + std::to_string(config.dim));
  std::vector<FacetCertificate> out;
  for (const auto& f : hull_facets(config.points)) {
    // <x, a> + b >= 0 with b > 0 because the origin is interior.
    const Rational b(f.ray.back());
    if (b <= 0) throw NotFullDimensional("origin is not interior");
    FacetCertificate cert;
    for (std::size_t i = 0; i + 1 < f.ray.size(); ++i) cert.normal.push_back(Rational(f.ray[i]) / b);
    for (std::size_t k = 0; k < config.size(); ++k)
      if (f.tight.test(k)) cert.support.push_back(config.labels[k]);
    out.push_back(std::move(cert));
  }
  std::sort(out.begin(), out.end(), [](const FacetCertificate& a, const FacetCertificate& b) {
    return lex_less(a.normal, b.normal);
  });
  return out;
}

bool validate_facet(const PointConfiguration& config, const FacetCertificate& facet) {
  if (config.dim == 0) return facet.support.empty() && facet.normal.empty();
  if (static_cast<int>(facet.normal.size()) != config.dim) return false;
  for (std::size_t k = 0; k < config.size(); ++k) {
    const Rational v = dot(config.points[k], facet.normal);
    const bool on = std::binary_search(facet.support.begin(), facet.support.end(),
                                       config.labels[k]);
    if (on ? v != -1 : v <= -1) return false;
  }
  return static_cast<int>(rank(ExactMatrix::from_integers(config.points_of(facet.support)))) ==
         config.dim;
}

bool is_simplicial(const FacetCertificate& facet, int dim) {
  return static_cast<int>(facet.support.size()) == dim;
}

namespace {

// det[ v_1 - v_0, ..., v_d - v_0 ] for d+1 points in R^d.
BigInt simplex_det(const std::vector<const IntVector*>& verts) {
  const std::size_t d = verts.size() - 1;
  std::vector<IntVector> m(d, IntVector(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m[r][c] = (*verts[r + 1])[c] - (*verts[0])[c];
  return integer_determinant(m);
}

int sign_of(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVector>& points) {
  if (points.empty()) throw NotFullDimensional("empty point set");
  const int d = static_cast<int>(points.front().size());
  if (affine_dimension(points) != d)
    throw NotFullDimensional("points do not span R^" + std::to_string(d));
  if (d == 0) return {{0}};

  // Initial simplex: the first affinely independent points in input order.
  std::vector<std::size_t> start;
  std::vector<IntVector> chosen;
  for (std::size_t i = 0; i < points.size() && static_cast<int>(start.size()) < d + 1; ++i) {
    chosen.push_back(points[i]);
    if (affine_dimension(chosen) == static_cast<int>(chosen.size()) - 1) {
      start.push_back(i);
    } else {
      chosen.pop_back();
    }
  }

  std::vector<std::vector<std::size_t>> simplices{start};
  // Boundary facet (sorted vertex indices) -> vertex of its simplex opposite to it.
  std::map<std::vector<std::size_t>, std::size_t> boundary;
  for (std::size_t skip = 0; skip <= static_cast<std::size_t>(d); ++skip) {
    std::vector<std::size_t> facet;
    for (std::size_t j = 0; j <= static_cast<std::size_t>(d); ++j)
      if (j != skip) facet.push_back(start[j]);
    boundary[facet] = start[skip];
  }

  std::vector<bool> used(points.size(), false);
  for (auto s : start) used[s] = true;
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (used[p]) continue;
    std::vector<std::vector<std::size_t>> visible;
    for (const auto& [facet, opposite] : boundary) {
      std::vector<const IntVector*> verts;
      for (auto v : facet) verts.push_back(&points[v]);
      verts.push_back(&points[p]);
      const int side_p = sign_of(simplex_det(verts));
      verts.back() = &points[opposite];
      const int side_o = sign_of(simplex_det(verts));
      if (side_p != 0 && side_p == -side_o) visible.push_back(facet);
    }
    if (visible.empty()) continue;
    used[p] = true;
    for (const auto& facet : visible) boundary.erase(facet);
    // New facets through p: those produced twice are shared by two new
    // simplices and hence interior.
    std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> fresh;
    for (const auto& facet : visible) {
      std::vector<std::size_t> simplex = facet;
      simplex.push_back(p);
      std::sort(simplex.begin(), simplex.end());
      simplices.push_back(simplex);
      for (std::size_t drop = 0; drop < facet.size(); ++drop) {
        std::vector<std::size_t> side;
        for (std::size_t j = 0; j < facet.size(); ++j)
          if (j != drop) side.push_back(facet[j]);
        side.push_back(p);
        std::sort(side.begin(), side.end());
        auto& slot = fresh[side];
        ++slot.first;
        slot.second = facet[drop];
      }
    }
    for (const auto& [side, entry] : fresh)
      if (entry.first == 1) boundary[side] = entry.second;
  }
  return simplices;
}

BigInt normalized_volume(const std::vector<IntVector>& points) {
  BigInt total = 0;
  for (const auto& simplex : placing_triangulation(points)) {
    std::vector<const IntVector*> verts;
    for (auto v : simplex) verts.push_back(&points[v]);
    if (verts.size() == 1) return 1;
    total += abs(simplex_det(verts));
  }
  return total;
}

BigInt normalized_volume(const PointConfiguration& config) {
  if (config.dim == 0) return 1;
  return normalized_volume(config.points);
}

}  // namespace apx
