#include "charcalc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace charcalc {

namespace {

/// a -= factor * b, both sorted sparse rows.
SparseRow axpy(const SparseRow& a, const Rational& factor, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(factor * b[j].second));
      ++j;
    } else {
      Rational c = a[i].second - factor * b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

Rational coeff_of(const SparseRow& r, std::uint32_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, std::uint32_t c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? it->second : Rational(0);
}

}  // namespace

SparseRow RowSpan::reduce(SparseRow row) const {
  std::size_t pos = 0;
  while (pos < row.size()) {
    auto it = pivot_row_.find(row[pos].first);
    if (it == pivot_row_.end()) {
      ++pos;
      continue;
    }
    // Pivot coefficient is 1, so the factor is the entry itself. Entries
    // before pos are non-pivot columns and stay untouched (the pivot is the
    // smallest column of its row).
    row = axpy(row, row[pos].second, rows_[it->second]);
  }
  return row;
}

bool RowSpan::add(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  // Normalize the pivot to 1.
  Rational lead = row.front().second;
  if (!lead.is_one())
    for (auto& [c, v] : row) v /= lead;
  std::uint32_t p = row.front().first;
  // Back-eliminate the new pivot from existing rows.
  for (auto& r : rows_) {
    Rational f = coeff_of(r, p);
    if (!f.is_zero()) r = axpy(r, f, row);
  }
  pivot_row_.emplace(p, rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

SpanReduceResult span_reduce(const std::vector<GradedPoly>& vectors, unsigned degree) {
  SpanReduceResult result;
  if (vectors.empty()) return result;

  const RingPtr& ring = vectors.front().ring();
  for (const auto& v : vectors) {
    if (!same_ring(ring, v.ring()))
      throw std::invalid_argument("span_reduce: ring mismatch");
    auto w = v.homogeneous_weight();  // throws when inhomogeneous
    if (w && *w != degree)
      throw std::invalid_argument("span_reduce: input of wrong degree");
  }

  // Column universe: every monomial occurring, in canonical order.
  std::map<Monomial, std::uint32_t> col_of;
  for (const auto& v : vectors)
    for (const auto& [m, c] : v.terms()) col_of.emplace(m, 0);
  std::vector<const Monomial*> monomials;
  monomials.reserve(col_of.size());
  {
    std::uint32_t i = 0;
    for (auto& [m, idx] : col_of) {
      idx = i++;
      monomials.push_back(&m);
    }
  }

  auto to_row = [&](const GradedPoly& v) {
    SparseRow r;
    r.reserve(v.term_count());
    for (const auto& [m, c] : v.terms()) r.emplace_back(col_of.at(m), c);
    return r;  // map iteration order matches ascending columns
  };

  RowSpan span;
  for (const auto& v : vectors) span.add(to_row(v));

  for (std::size_t i = 0; i < span.rank(); ++i) {
    GradedPoly b(ring);
    for (const auto& [col, c] : span.row(i)) b.add_term(*monomials[col], c);
    result.basis.push_back(std::move(b));
  }
  // In reduced form each pivot monomial occurs in exactly one basis vector,
  // so coordinates can be read off the pivot coefficients.
  for (const auto& v : vectors) {
    std::vector<Rational> coords;
    coords.reserve(span.rank());
    for (std::size_t i = 0; i < span.rank(); ++i)
      coords.push_back(v.coefficient(*monomials[span.pivot(i)]));
    result.coordinates.push_back(std::move(coords));
  }
  return result;
}

std::size_t RationalMatrix::rank() const {
  auto m = a_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows_) continue;
    std::swap(m[rank], m[pivot]);
    const Rational lead = m[rank][col];
    for (std::size_t j = col; j < cols_; ++j) m[rank][j] /= lead;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < cols_; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace charcalc
