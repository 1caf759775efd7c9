#include "apx/hull.hpp"

#include <algorithm>

#include "apx/errors.hpp"

namespace apx {

namespace {

BigInt row_dot(const IntVector& row, const std::vector<BigInt>& ray) {
  BigInt acc = 0;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0 && !ray[i].is_zero()) acc += ray[i] * row[i];
  return acc;
}

void make_primitive(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& x : v)
    if (!x.is_zero()) g = boost::multiprecision::gcd(g, BigInt(abs(x)));
  if (g > 1)
    for (auto& x : v) x /= g;
}

// Greedily picks rows that raise the rank until it reaches the column count.
std::vector<std::size_t> initial_basis(const std::vector<IntVector>& rows, std::size_t dim) {
  std::vector<std::size_t> chosen;
  std::vector<IntVector> current;
  for (std::size_t i = 0; i < rows.size() && chosen.size() < dim; ++i) {
    current.push_back(rows[i]);
    if (rank(ExactMatrix::from_integers(current)) == current.size()) {
      chosen.push_back(i);
    } else {
      current.pop_back();
    }
  }
  if (chosen.size() < dim)
    throw NotFullDimensional("rows have rank " + std::to_string(chosen.size()) + " < " +
                             std::to_string(dim));
  return chosen;
}

}  // namespace

std::vector<ExtremeRay> extreme_rays(const std::vector<IntVector>& rows) {
  if (rows.empty()) throw NotFullDimensional("no constraints");
  const std::size_t dim = rows.front().size();
  const std::size_t m = rows.size();
  const auto basis = initial_basis(rows, dim);

  // The cone {y : B y >= 0} has the columns of B^{-1} as extreme rays.
  std::vector<IntVector> b_rows;
  for (auto i : basis) b_rows.push_back(rows[i]);
  const ExactMatrix b = ExactMatrix::from_integers(b_rows);
  std::vector<ExtremeRay> rays;
  for (std::size_t k = 0; k < dim; ++k) {
    ExactVector unit(dim);
    unit[k] = 1;
    const ExactVector col = primitive(solve_unique(b, unit));
    ExtremeRay r;
    for (const auto& x : col) r.ray.push_back(numerator(x));
    r.tight.resize(m);
    for (std::size_t j = 0; j < dim; ++j)
      if (j != k) r.tight.set(basis[j]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> processed(m, false);
  for (auto i : basis) processed[i] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    std::vector<BigInt> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = row_dot(rows[i], rays[r].ray);
      if (value[r] > 0) {
        pos.push_back(r);
      } else if (value[r] < 0) {
        neg.push_back(r);
      }
    }
    std::vector<ExtremeRay> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (value[r] < 0) continue;
      next.push_back(rays[r]);
      if (value[r].is_zero()) next.back().tight.set(i);
    }
    for (auto p : pos) {
      for (auto q : neg) {
        const boost::dynamic_bitset<> common = rays[p].tight & rays[q].tight;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        ExtremeRay fresh;
        fresh.ray.resize(dim);
        for (std::size_t c = 0; c < dim; ++c)
          fresh.ray[c] = value[p] * rays[q].ray[c] - value[q] * rays[p].ray[c];
        make_primitive(fresh.ray);
        fresh.tight = common;
        fresh.tight.set(i);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  // Tight sets were only tracked over processed rows; all rows are processed now.
  std::sort(rays.begin(), rays.end(),
            [](const ExtremeRay& a, const ExtremeRay& b) { return a.ray < b.ray; });
  return rays;
}

std::vector<ExtremeRay> hull_facets(const std::vector<IntVector>& points) {
  std::vector<IntVector> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    IntVector row(p);
    row.push_back(1);
    rows.push_back(std::move(row));
  }
  return extreme_rays(rows);
}

}  // namespace apx
