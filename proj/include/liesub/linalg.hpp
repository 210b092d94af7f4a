#pragma once

// Exact dense linear algebra over Rational or FieldElement. Matrices are
// row-major vectors of rows; every routine is Gauss-Jordan elimination with
// exact pivots, so ranks and kernels are exact.

#include <cstddef>
#include <optional>
#include <vector>

#include "liesub/field.hpp"
#include "liesub/rational.hpp"

namespace liesub::linalg {

template <class S>
using Vec = std::vector<S>;
template <class S>
using Mat = std::vector<Vec<S>>;

/// Reduced row echelon form in place, pivoting only within the first
/// `ncols` columns (row operations span the full rows). Returns the pivot
/// columns in row order; zero rows are dropped.
template <class S>
std::vector<std::size_t> rref(Mat<S>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && is_zero(m[p][col])) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const std::size_t width = m[row].size();
    const S inv = inverse(m[row][col]);
    for (std::size_t j = col; j < width; ++j) {
      if (!is_zero(m[row][j])) m[row][j] *= inv;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || is_zero(m[i][col])) continue;
      const S f = m[i][col];
      for (std::size_t j = col; j < width; ++j) {
        if (!is_zero(m[row][j])) m[i][j] -= f * m[row][j];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

template <class S>
std::size_t rank(Mat<S> m, std::size_t ncols) {
  return rref(m, ncols).size();
}

/// Basis of { x : m x = 0 }. `zero` supplies the scalar domain when m is empty.
template <class S>
Mat<S> nullspace(Mat<S> m, std::size_t ncols, const S& zero) {
  const auto pivots = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Mat<S> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec<S> v(ncols, zero);
    v[free] = one_like(zero);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (!is_zero(m[r][free])) v[pivots[r]] = -m[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of m x = b, if any.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& m, const Vec<S>& b, std::size_t ncols, const S& zero) {
  Mat<S> aug;
  aug.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    Vec<S> row = m[i];
    row.resize(ncols, zero);
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  const auto pivots = rref(aug, ncols + 1);
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  Vec<S> x(ncols, zero);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][ncols];
  return x;
}

/// Incremental row-echelon basis used for span-closure computations.
template <class S>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ncols) : ncols_(ncols) {}

  std::size_t size() const { return rows_.size(); }
  const Mat<S>& rows() const { return rows_; }

  /// Reduces v against the basis; returns true and stores it if independent.
  bool insert(Vec<S> v) {
    reduce(v);
    std::size_t lead = 0;
    while (lead < ncols_ && is_zero(v[lead])) ++lead;
    if (lead == ncols_) return false;
    const S inv = inverse(v[lead]);
    for (std::size_t j = lead; j < ncols_; ++j) {
      if (!is_zero(v[j])) v[j] *= inv;
    }
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    return true;
  }

  bool contains(Vec<S> v) const {
    reduce(v);
    for (const auto& c : v) {
      if (!is_zero(c)) return false;
    }
    return true;
  }

 private:
  void reduce(Vec<S>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t l = leads_[r];
      if (is_zero(v[l])) continue;
      const S f = v[l];
      for (std::size_t j = l; j < ncols_; ++j) {
        if (!is_zero(rows_[r][j])) v[j] -= f * rows_[r][j];
      }
    }
  }

  std::size_t ncols_;
  Mat<S> rows_;
  std::vector<std::size_t> leads_;
};

/// Inverse of a square rational matrix; throws DivisionByZero if singular.
Mat<Rational> inverse(const Mat<Rational>& m);

}  // namespace liesub::linalg
