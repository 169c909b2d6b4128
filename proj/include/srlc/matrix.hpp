#pragma once

// Dense matrices over an exact field and the elimination routines built on
// them: rank, kernel, span membership, determinants and left inverses.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "srlc/field.hpp"

namespace srlc {

template <Field F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  explicit Matrix(F field = F{}, std::size_t rows = 0, std::size_t cols = 0)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Matrix with the given entries (row-major) converted from integers.
  static Matrix from_ints(const F& field, const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  static Matrix from_columns(const F& field, std::size_t rows,
                             const std::vector<std::vector<value_type>>& columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<value_type> column(std::size_t c) const {
    std::vector<value_type> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        const value_type& a = (*this)(r, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t c = 0; c < rhs.cols_; ++c) {
          const value_type& b = rhs(k, c);
          if (!field_.is_zero(b)) out(r, c) = field_.add(out(r, c), field_.mul(a, b));
        }
      }
    return out;
  }

  std::vector<value_type> apply(const std::vector<value_type>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<value_type> y(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) {
        if (field_.is_zero((*this)(r, c)) || field_.is_zero(x[c])) continue;
        y[r] = field_.add(y[r], field_.mul((*this)(r, c), x[c]));
      }
    return y;
  }

  Matrix scaled(const value_type& s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x = field_.mul(x, s);
    return out;
  }

  /// Copies `block` into this matrix with its top-left corner at (r0, c0),
  /// adding to what is already there.
  void add_block(std::size_t r0, std::size_t c0, const Matrix& block) {
    if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
      throw std::out_of_range("block does not fit");
    for (std::size_t r = 0; r < block.rows_; ++r)
      for (std::size_t c = 0; c < block.cols_; ++c)
        (*this)(r0 + r, c0 + c) = field_.add((*this)(r0 + r, c0 + c), block(r, c));
  }

  Matrix submatrix(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const {
    Matrix out(field_, row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r)
      for (std::size_t c = 0; c < col_idx.size(); ++c) out(r, c) = (*this)(row_idx[r], col_idx[c]);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!a.field_.equal(a.data_[k], b.data_[k])) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      s += r == 0 ? "[" : ", [";
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) s += ", ";
        s += field_.to_string((*this)(r, c));
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

template <Field F>
Matrix<F> vstack(const F& field, const std::vector<Matrix<F>>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw std::invalid_argument("vstack column mismatch");
    rows += p.rows();
  }
  Matrix<F> out(field, rows, cols);
  std::size_t r0 = 0;
  for (const auto& p : parts) {
    out.add_block(r0, 0, p);
    r0 += p.rows();
  }
  return out;
}

template <Field F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix<F> out(a.field(), a.rows(), a.cols() + b.cols());
  out.add_block(0, 0, a);
  out.add_block(0, a.cols(), b);
  return out;
}

template <Field F>
struct Echelon {
  Matrix<F> reduced;               // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row echelon form. Pivots are taken in
/// column order, first nonzero row wins, so the result is deterministic.
template <Field F>
Echelon<F> rref(Matrix<F> m) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    auto inv = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || f.is_zero(m(r, col))) continue;
      auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!f.is_zero(m(row, c))) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

/// Rank by forward elimination only (no back substitution).
template <Field F>
std::size_t rank(Matrix<F> m) {
  const F& f = m.field();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    auto inv = f.inv(m(row, col));
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (f.is_zero(m(r, col))) continue;
      auto factor = f.mul(m(r, col), inv);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!f.is_zero(m(row, c))) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    ++row;
  }
  return row;
}

/// Columns form a basis of ker m, one per free column of the reduced echelon
/// form: 1 in the free position, minus the pivot-row entries elsewhere.
template <Field F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  const F& f = m.field();
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<F> basis(f, m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis(fc, k) = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = f.neg(r(i, fc));
  }
  return basis;
}

/// Some x with a * x = b, or nullopt when b is outside the column span.
template <Field F>
std::optional<std::vector<typename F::value_type>> solve_in_span(
    const Matrix<F>& a, const std::vector<typename F::value_type>& b) {
  const F& f = a.field();
  if (b.size() != a.rows()) throw std::invalid_argument("solve_in_span shape mismatch");
  Matrix<F> aug(f, a.rows(), a.cols() + 1);
  aug.add_block(0, 0, a);
  for (std::size_t r = 0; r < a.rows(); ++r) aug(r, a.cols()) = b[r];
  auto [red, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<typename F::value_type> x(a.cols(), f.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, a.cols());
  return x;
}

/// Determinant of a square matrix.
template <Field F>
typename F::value_type determinant(Matrix<F> m) {
  const F& f = m.field();
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  auto det = f.one();
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && f.is_zero(m(sel, col))) ++sel;
    if (sel == n) return f.zero();
    if (sel != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(m(sel, c), m(col, c));
      det = f.neg(det);
    }
    det = f.mul(det, m(col, col));
    auto inv = f.inv(m(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (f.is_zero(m(r, col))) continue;
      auto factor = f.mul(m(r, col), inv);
      for (std::size_t c = col; c < n; ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(col, c)));
    }
  }
  return det;
}

/// L with L * m = I for a matrix of full column rank.
template <Field F>
Matrix<F> left_inverse(const Matrix<F>& m) {
  const F& f = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  auto aug = hstack(m, Matrix<F>::identity(f, rows));
  auto [red, pivots] = rref(std::move(aug));
  if (pivots.size() < cols || (cols > 0 && pivots[cols - 1] != cols - 1))
    throw std::invalid_argument("left_inverse needs full column rank");
  Matrix<F> l(f, cols, rows);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < rows; ++j) l(i, j) = red(i, cols + j);
  return l;
}

}  // namespace srlc
