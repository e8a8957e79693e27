#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "ehrhart/numeric.hpp"

namespace ehrhart {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

  static IntMatrix identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVec>& cols) {
    if (cols.empty()) return IntMatrix(0, 0);
    IntMatrix m(cols[0].size(), cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      assert(cols[j].size() == m.rows_);
      for (size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Int& operator()(size_t i, size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

  IntVec column(size_t j) const {
    IntVec c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    assert(cols_ == o.rows_);
    IntMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const Int& a = (*this)(i, k);
        if (a == 0) continue;
        for (size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  IntVec operator*(const IntVec& v) const {
    assert(cols_ == v.size());
    IntVec r(rows_, Int(0));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  // Elementary column operations (used by the normal-form algorithms).
  void swap_cols(size_t a, size_t b) {
    for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  void negate_col(size_t j) {
    for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }
  void add_col_multiple(size_t dst, size_t src, const Int& f) {
    if (f == 0) return;
    for (size_t i = 0; i < rows_; ++i) (*this)(i, dst) += f * (*this)(i, src);
  }
  void swap_rows(size_t a, size_t b) {
    for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void negate_row(size_t i) {
    for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  void add_row_multiple(size_t dst, size_t src, const Int& f) {
    if (f == 0) return;
    for (size_t j = 0; j < cols_; ++j) (*this)(dst, j) += f * (*this)(src, j);
  }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Int> entries_;
};

namespace detail {

// Gaussian elimination over Q. Workhorse for solving, rank, null spaces
// and inverses at desk scale.
class RatMatrix {
 public:
  RatMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

  explicit RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = Rat(m(i, j));
  }

  static RatMatrix from_columns(const std::vector<RatVec>& cols) {
    if (cols.empty()) return RatMatrix(0, 0);
    RatMatrix m(cols[0].size(), cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
      for (size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rat& operator()(size_t i, size_t j) { return entries_[i * cols_ + j]; }
  const Rat& operator()(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

  // Reduced row echelon form in place; returns pivot column per pivot row.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
      size_t sel = r;
      while (sel < rows_ && (*this)(sel, c) == 0) ++sel;
      if (sel == rows_) continue;
      if (sel != r)
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(r, j));
      Rat inv = Rat(1) / (*this)(r, c);
      for (size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c) == 0) continue;
        Rat f = (*this)(i, c);
        for (size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  size_t rank() const {
    RatMatrix m(*this);
    return m.rref().size();
  }

 private:
  size_t rows_, cols_;
  std::vector<Rat> entries_;
};

// Solves A x = b exactly. Returns false if the system is inconsistent;
// for underdetermined consistent systems returns one solution (free
// variables set to 0).
inline bool solve_linear(const RatMatrix& a, const RatVec& b, RatVec& x) {
  assert(a.rows() == b.size());
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<size_t> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == a.cols()) return false;  // inconsistent
  x.assign(a.cols(), Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return true;
}

// Basis of the null space of A (vectors y with A y = 0).
inline std::vector<RatVec> null_space(RatMatrix a) {
  std::vector<size_t> pivots = a.rref();
  std::vector<bool> is_pivot(a.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (size_t c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    RatVec v(a.cols(), Rat(0));
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Exact inverse of a square rational matrix; asserts invertibility.
inline RatMatrix inverse(const RatMatrix& a) {
  assert(a.rows() == a.cols());
  size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<size_t> pivots = aug.rref();
  assert(pivots.size() == n && pivots.back() == n - 1);
  RatMatrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

inline Rat determinant(const RatMatrix& a) {
  assert(a.rows() == a.cols());
  RatMatrix m(a);
  size_t n = m.rows();
  Rat det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t sel = c;
    while (sel < n && m(sel, c) == 0) ++sel;
    if (sel == n) return Rat(0);
    if (sel != c) {
      for (size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Rat inv = Rat(1) / m(c, c);
    for (size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) * inv;
      for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

}  // namespace detail

inline Int determinant(const IntMatrix& m) {
  Rat d = detail::determinant(detail::RatMatrix(m));
  assert(is_integral(d));
  return num(d);
}

}  // namespace ehrhart
