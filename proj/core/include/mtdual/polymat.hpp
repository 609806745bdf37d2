#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtdual/poly.hpp"

namespace mtdual {

/// Dense row-major matrix over F_q[x]. Empty shapes (0 x n, n x 0) are valid.
class PolyMatrix {
 public:
  PolyMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  /// Builds from explicit rows; all rows must have the same length.
  PolyMatrix(FieldPtr field, const std::vector<std::vector<Poly>>& rows, std::size_t cols);

  static PolyMatrix identity(FieldPtr field, std::size_t n);
  static PolyMatrix diagonal(FieldPtr field, const std::vector<Poly>& diag);
  /// Parses the canonical text block: one row per line, entries split by '|'.
  static PolyMatrix parse(FieldPtr field, std::string_view text);

  const FieldPtr& field_ptr() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Poly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Poly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  std::vector<Poly> row(std::size_t i) const;

  PolyMatrix operator+(const PolyMatrix& rhs) const;
  PolyMatrix operator-(const PolyMatrix& rhs) const;
  PolyMatrix operator*(const PolyMatrix& rhs) const;
  bool operator==(const PolyMatrix& rhs) const;
  bool operator!=(const PolyMatrix& rhs) const { return !(*this == rhs); }

  PolyMatrix transpose() const;
  /// Rows [first, first + count).
  PolyMatrix row_block(std::size_t first, std::size_t count) const;
  /// The submatrix of rows [r0, r0+nr) and columns [c0, c0+nc).
  PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Rows of *this followed by rows of `below`.
  PolyMatrix stacked(const PolyMatrix& below) const;

  bool is_zero() const;
  bool is_upper_triangular() const;
  bool is_over_subfield(int upsilon) const;

  /// One row per line, entries separated by " | ".
  std::string to_string() const;

  /// Row operation: row(target) += factor * row(source).
  void add_row_multiple(std::size_t target, std::size_t source, const Poly& factor);
  void swap_rows(std::size_t a, std::size_t b);
  void scale_row(std::size_t i, const FieldElement& c);

 private:
  void check_same_field(const PolyMatrix& rhs) const;

  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> entries_;
};

std::ostream& operator<<(std::ostream& os, const PolyMatrix& m);

/// Rectangular matrix of Laurent polynomials; only used to display the
/// intermediate stages of the dual construction.
struct LaurentMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<LaurentPoly> entries;

  const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  std::string to_string() const;
};

struct HNFResult {
  PolyMatrix hnf;        // upper echelon, monic pivots, reduced above pivots
  PolyMatrix transform;  // unimodular, hnf = transform * input
  std::size_t rank = 0;
};

/// Row Hermite normal form over F_q[x].
///
/// Pivot columns are processed left to right. Each column is cleared below
/// its pivot by repeated division with the lowest-degree entry, the pivot is
/// made monic, and entries above it are reduced to lower degree. The result
/// is the unique such basis of the row module. For a square input of
/// deficient rank a PreconditionError is thrown.
HNFResult hermite_normal_form(const PolyMatrix& m);

/// HNF of a full-column-rank stack truncated to its top cols x cols block.
PolyMatrix reduced_basis(const PolyMatrix& stack);

/// Exact determinant. Triangular inputs use the diagonal product, everything
/// else fraction-free elimination. det of 0x0 is 1.
Poly determinant(const PolyMatrix& m);

/// A with A * g = d for upper triangular g with nonzero diagonal, by back
/// substitution. Throws PreconditionError when d is not in the row module.
PolyMatrix solve_left_factor(const PolyMatrix& g, const PolyMatrix& d);
std::optional<PolyMatrix> try_solve_left_factor(const PolyMatrix& g, const PolyMatrix& d);

PolyMatrix frobenius_matrix(const PolyMatrix& m, long long mu);
PolyMatrix trace_matrix(const PolyMatrix& m, int upsilon);

}  // namespace mtdual
