#ifndef CHARCALC_LINALG_HPP
#define CHARCALC_LINALG_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "charcalc/poly.hpp"
#include "charcalc/rational.hpp"

namespace charcalc {

/// Sparse row: (column, coefficient) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

/// Incremental reduced row echelon form over the rationals. Rows keep their
/// insertion order; the pivot of a row is its smallest column, pivots are
/// normalized to 1 and eliminated from every other row. Adding the rows of a
/// finished span back in reproduces it unchanged.
class RowSpan {
public:
  /// Fully reduces a row against the current span.
  SparseRow reduce(SparseRow row) const;

  /// Reduces and inserts if independent; returns true when the rank grew.
  bool add(SparseRow row);

  std::size_t rank() const { return rows_.size(); }
  const SparseRow& row(std::size_t i) const { return rows_[i]; }
  std::uint32_t pivot(std::size_t i) const { return rows_[i].front().first; }
  bool is_pivot_column(std::uint32_t col) const { return pivot_row_.count(col) != 0; }

private:
  std::vector<SparseRow> rows_;
  std::map<std::uint32_t, std::size_t> pivot_row_;
};

struct SpanReduceResult {
  /// Reduced basis of the span, in first-pivot-wins order.
  std::vector<GradedPoly> basis;
  /// coordinates[i] expresses vectors[i] in that basis.
  std::vector<std::vector<Rational>> coordinates;
};

/// Exact Gaussian elimination on homogeneous polynomials of the given
/// weight. Deterministic for a fixed input order. Throws on weight-
/// inhomogeneous input or mixed rings.
SpanReduceResult span_reduce(const std::vector<GradedPoly>& vectors, unsigned degree);

/// Dense rational matrix with exact rank and nullspace computations.
class RationalMatrix {
public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i][j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i][j]; }

  std::size_t rank() const;
  std::size_t nullspace_dim() const { return cols_ - rank(); }
  bool is_invertible() const { return rows_ == cols_ && rank() == cols_; }

private:
  std::size_t rows_, cols_;
  std::vector<std::vector<Rational>> a_;
};

}  // namespace charcalc

#endif
