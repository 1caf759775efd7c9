#pragma once

// Double description method for pointed polyhedral cones {y : <r_i, y> >= 0}.
// Rays are kept as primitive integer vectors, so every result is exact.

#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "apx/exactlin.hpp"

namespace apx {

struct ExtremeRay {
  std::vector<BigInt> ray;
  /// Bit i is set iff <rows[i], ray> == 0.
  boost::dynamic_bitset<> tight;
};

/// Extreme rays of the cone cut out by integer rows. The rows must have full
/// column rank (pointed cone), otherwise NotFullDimensional is thrown.
/// Output is sorted lexicographically by ray.
std::vector<ExtremeRay> extreme_rays(const std::vector<IntVector>& rows);

/// Facets of conv(points) for a full-dimensional point set: each entry holds
/// (a, b) with <x, a> + b >= 0 for all points, equality exactly on `tight`.
std::vector<ExtremeRay> hull_facets(const std::vector<IntVector>& points);

}  // namespace apx
