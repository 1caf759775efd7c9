#pragma once

// Exact rational linear algebra. Every geometric certificate in the library
// is computed with these types; there is no floating point anywhere.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace apx {

using BigInt = boost::multiprecision::mpz_int;
/// Always in lowest terms with a positive denominator (GMP canonical form).
using Rational = boost::multiprecision::mpq_rational;
using ExactVector = std::vector<Rational>;
using IntVector = std::vector<long long>;

/// "p/q", or "p" for integers.
std::string to_string(const Rational& q);
/// Inverse of to_string; throws ParseError on malformed input.
Rational parse_rational(const std::string& text);

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  /// Rows must all have the same length.
  explicit ExactMatrix(const std::vector<ExactVector>& rows);
  static ExactMatrix from_integers(const std::vector<IntVector>& rows);
  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ExactVector row(std::size_t r) const;
  ExactVector multiply(const ExactVector& x) const;
  ExactMatrix transposed() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
ExactMatrix rref(ExactMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const ExactMatrix& m);

/// Basis of the right kernel. Each vector is scaled to a primitive integer
/// vector whose first nonzero entry is positive.
std::vector<ExactVector> nullspace_basis(const ExactMatrix& m);

/// Solves M x = b for square nonsingular M; throws SingularMatrix otherwise.
ExactVector solve_unique(const ExactMatrix& m, const ExactVector& b);

/// Coefficients lambda with sum(lambda) = 0 and sum(lambda_i x_i) = 0, or
/// nullopt when the points are affinely independent. The returned vector is
/// primitive integral with its first nonzero coefficient positive.
std::optional<ExactVector> affine_dependence(const std::vector<ExactVector>& points);
std::optional<ExactVector> affine_dependence(const std::vector<IntVector>& points);

/// Dimension of the affine hull; -1 for the empty set.
int affine_dimension(const std::vector<IntVector>& points);

/// Exact determinant of a square integer matrix (fraction-free elimination).
BigInt integer_determinant(const std::vector<IntVector>& m);

Rational dot(const ExactVector& a, const ExactVector& b);
Rational dot(const IntVector& a, const ExactVector& b);

/// Scales v to a primitive integer vector (same direction, positive factor).
ExactVector primitive(const ExactVector& v);
/// primitive() followed by flipping so the first nonzero entry is positive.
ExactVector canonical_sign(const ExactVector& v);

ExactVector to_exact(const IntVector& v);

/// Lexicographic comparison of equally sized vectors.
bool lex_less(const ExactVector& a, const ExactVector& b);

}  // namespace apx
