#include "apx/exactlin.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "apx/errors.hpp"

namespace apx {

std::string to_string(const Rational& q) {
  // GMP already emits "p" for integers and "p/q" otherwise.
  return q.str();
}

Rational parse_rational(const std::string& text) {
  try {
    if (text.empty()) throw std::invalid_argument("empty");
    Rational q(text);
    return q;
  } catch (const std::exception&) {
    throw ParseError("not a rational number: '" + text + "'");
  }
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(const std::vector<ExactVector>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ExactMatrix: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::from_integers(const std::vector<IntVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ExactMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactVector ExactMatrix::row(std::size_t r) const {
  return ExactVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ExactVector ExactMatrix::multiply(const ExactVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("ExactMatrix::multiply: size mismatch");
  ExactVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero() && !x[c].is_zero()) acc += (*this)(r, c) * x[c];
    }
    y[r] = acc;
  }
  return y;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactMatrix rref(ExactMatrix m, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead_row, c));
    const Rational inv = 1 / m(lead_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(lead_row, c).is_zero()) m(r, c) -= factor * m(lead_row, c);
      }
    }
    if (pivots) pivots->push_back(col);
    ++lead_row;
  }
  return m;
}

std::size_t rank(const ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

std::vector<ExactVector> nullspace_basis(const ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  const ExactMatrix reduced = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.push_back(canonical_sign(v));
  }
  return basis;
}

ExactVector solve_unique(const ExactMatrix& m, const ExactVector& b) {
  if (m.rows() != m.cols()) throw SingularMatrix("matrix is not square");
  if (b.size() != m.rows()) throw std::invalid_argument("solve_unique: size mismatch");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  std::vector<std::size_t> pivots;
  const ExactMatrix reduced = rref(aug, &pivots);
  if (pivots.size() < n || (n > 0 && pivots.back() >= n))
    throw SingularMatrix("rank " + std::to_string(std::min(pivots.size(), n)) + " < " +
                         std::to_string(n));
  ExactVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = reduced(r, n);
  return x;
}

namespace {

ExactMatrix homogenized_columns(const std::vector<ExactVector>& points) {
  const std::size_t dim = points.front().size();
  ExactMatrix m(dim + 1, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].size() != dim) throw std::invalid_argument("points of mixed dimension");
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = points[j][i];
    m(dim, j) = 1;
  }
  return m;
}

}  // namespace

std::optional<ExactVector> affine_dependence(const std::vector<ExactVector>& points) {
  if (points.empty()) return std::nullopt;
  auto kernel = nullspace_basis(homogenized_columns(points));
  if (kernel.empty()) return std::nullopt;
  return kernel.front();
}

std::optional<ExactVector> affine_dependence(const std::vector<IntVector>& points) {
  std::vector<ExactVector> exact;
  exact.reserve(points.size());
  for (const auto& p : points) exact.push_back(to_exact(p));
  return affine_dependence(exact);
}

int affine_dimension(const std::vector<IntVector>& points) {
  if (points.empty()) return -1;
  std::vector<ExactVector> exact;
  for (const auto& p : points) exact.push_back(to_exact(p));
  return static_cast<int>(rank(homogenized_columns(exact))) - 1;
}

namespace {

BigInt bareiss_big(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return n == 0 ? BigInt(1) : sign * a[n - 1][n - 1];
}

// Bareiss in machine integers; returns false on overflow.
bool bareiss_small(std::vector<IntVector> a, long long& out) {
  const std::size_t n = a.size();
  long long sign = 1;
  long long prev = 1;
  constexpr __int128 kMax = std::numeric_limits<long long>::max();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) {
        out = 0;
        return true;
      }
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 v = (static_cast<__int128>(a[i][j]) * a[k][k] -
                            static_cast<__int128>(a[i][k]) * a[k][j]) /
                           prev;
        if (v > kMax || v < -kMax) return false;
        a[i][j] = static_cast<long long>(v);
      }
    }
    prev = a[k][k];
  }
  out = n == 0 ? 1 : sign * a[n - 1][n - 1];
  return true;
}

}  // namespace

BigInt integer_determinant(const std::vector<IntVector>& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("determinant of non-square matrix");
  long long small = 0;
  if (bareiss_small(m, small)) return BigInt(small);
  std::vector<std::vector<BigInt>> big(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) big[i].assign(m[i].begin(), m[i].end());
  return bareiss_big(std::move(big));
}

Rational dot(const ExactVector& a, const ExactVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  return acc;
}

Rational dot(const IntVector& a, const ExactVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 1) {
      acc += b[i];
    } else if (a[i] == -1) {
      acc -= b[i];
    } else if (a[i] != 0) {
      acc += a[i] * b[i];
    }
  }
  return acc;
}

ExactVector primitive(const ExactVector& v) {
  BigInt lcm_den = 1;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    lcm_den = boost::multiprecision::lcm(lcm_den, BigInt(denominator(x)));
  }
  BigInt g = 0;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    BigInt scaled = numerator(x) * (lcm_den / denominator(x));
    g = boost::multiprecision::gcd(g, BigInt(abs(scaled)));
  }
  if (g == 0) return v;
  ExactVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    out[i] = Rational(BigInt(numerator(v[i]) * (lcm_den / denominator(v[i])) / g));
  }
  return out;
}

ExactVector canonical_sign(const ExactVector& v) {
  ExactVector out = primitive(v);
  for (const auto& x : out) {
    if (x.is_zero()) continue;
    if (x < 0)
      for (auto& y : out) y = -y;
    break;
  }
  return out;
}

ExactVector to_exact(const IntVector& v) {
  ExactVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

bool lex_less(const ExactVector& a, const ExactVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace apx
