// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense row-major matrices over an exact field (Rational or Zp) and the
// elimination routines built on them.

#ifndef MILNOR_MATRIX_HPP_
#define MILNOR_MATRIX_HPP_

#include <cassert>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "milnor/exact.hpp"

namespace milnor {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols) : Matrix(rows, cols, T{}) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (const auto& r : rows) {
      assert(r.size() == m.cols_);
      m.data_.insert(m.data_.end(), r.begin(), r.end());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  // Columns in the given order.
  Matrix select_columns(std::span<const std::size_t> cols) const {
    Matrix out;
    out.rows_ = rows_;
    out.cols_ = cols.size();
    out.data_.reserve(rows_ * cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c : cols) out.data_.push_back((*this)(r, c));
    return out;
  }

  Matrix stacked(const Matrix& below) const {
    assert(below.cols_ == cols_ || rows_ == 0);
    Matrix out = *this;
    out.cols_ = rows_ == 0 ? below.cols_ : cols_;
    out.rows_ += below.rows_;
    out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
struct RrefResult {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination; pivots are the leading columns of the nonzero
// rows, which come first.
template <class T>
RrefResult<T> rref(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead_row, k));
    const T inv_lead = scalar_like(m(lead_row, c), 1) / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv_lead;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || is_zero(m(r, c))) continue;
      const T factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= factor * m(lead_row, k);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

// Basis of {x : m x = 0}, one vector per free column, with a 1 in that column.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m, const T& like) {
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), scalar_like(like, 0));
    v[free] = scalar_like(like, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::vector<std::vector<Rational>> kernel_basis(const Matrix<Rational>& m) {
  return kernel_basis(m, Rational(0));
}

template <class T>
T determinant(Matrix<T> m) {
  assert(m.rows() == m.cols());
  if (m.rows() == 0) return T(1);
  T det = scalar_like(m(0, 0), 1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && is_zero(m(pivot, c))) ++pivot;
    if (pivot == n) return scalar_like(m(0, 0), 0);
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(pivot, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    const T inv = scalar_like(m(c, c), 1) / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(m(r, c))) continue;
      const T factor = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) m(r, k) -= factor * m(c, k);
    }
  }
  return det;
}

// True iff the row spaces of a and b coincide.
template <class T>
bool same_row_space(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) return false;
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(a.stacked(b));
}

Matrix<Rational> parse_rational_matrix(const std::vector<std::vector<std::string>>& rows);

Matrix<Zp> reduce_mod(const Matrix<Rational>& m, std::uint64_t p);

}  // namespace milnor

#endif  // MILNOR_MATRIX_HPP_
