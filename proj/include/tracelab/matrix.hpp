#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tracelab/error.hpp"
#include "tracelab/field.hpp"

namespace tracelab {

template <Field F>
using Vector = std::vector<F>;

/// Dense row-major matrix over an exact field.
template <Field F>
class Matrix {
 public:
  using value_type = F;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw Error(ErrorKind::DimensionMismatch, "entry count does not match shape");
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
      std::size_t j = 0;
      for (long v : row) m(i, j++) = F(v);
      ++i;
    }
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `height`).
  static Matrix from_columns(std::size_t height, std::span<const Vector<F>> columns) {
    Matrix m(height, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != height) {
        throw Error(ErrorKind::DimensionMismatch, "column length differs from height");
      }
      for (std::size_t i = 0; i < height; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const F> entries() const { return data_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector<F> column(std::size_t j) const {
    Vector<F> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Vector<F> row(std::size_t i) const {
    return Vector<F>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const F& x) { return x.is_zero(); });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
  }

  Vector<F> apply(std::span<const F> v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape");
    Vector<F> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        const F& a = (*this)(i, j);
        if (a.is_zero() || v[j].is_zero()) continue;
        out[i] += a * v[j];
      }
    }
    return out;
  }

  Matrix select_rows(std::span<const std::size_t> which) const {
    Matrix out(which.size(), cols_);
    for (std::size_t i = 0; i < which.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(which[i], j);
    return out;
  }

  Matrix select_cols(std::span<const std::size_t> which) const {
    Matrix out(rows_, which.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < which.size(); ++j) out(i, j) = (*this)(i, which[j]);
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const F& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const F& s) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const F& y = b(k, j);
          if (!y.is_zero()) out(i, j) += x * y;
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// [a | b]
template <Field F>
Matrix<F> hcat(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "hcat row counts");
  Matrix<F> out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

/// [a ; b]
template <Field F>
Matrix<F> vcat(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "vcat column counts");
  Matrix<F> out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

/// Stacks equally wide blocks vertically.
template <Field F>
Matrix<F> vstack(std::span<const Matrix<F>> blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorKind::DimensionMismatch, "vstack column counts");
    rows += b.rows();
  }
  Matrix<F> out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) out(r0 + i, j) = b(i, j);
    r0 += b.rows();
  }
  return out;
}

template <Field F>
Matrix<F> block_diagonal(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

/// Kronecker product: (a ⊗ b)(i·rb + k, j·cb + l) = a(i,j)·b(k,l).
template <Field F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const F& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const F& y = b(k, l);
          if (!y.is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  }
  return out;
}

template <Field F>
struct Echelon {
  Matrix<F> reduced;                 ///< reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row

  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination to the unique reduced row echelon form.
template <Field F>
Echelon<F> echelon(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    m.swap_rows(p, r);
    if (!m(r, c).is_one()) {
      const F inv = m(r, c).inverse();
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    std::vector<std::size_t> support;
    for (std::size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) support.push_back(j);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const F factor = m(i, c);
      for (std::size_t j : support) m(i, j).sub_mul(factor, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <Field F>
Matrix<F> reduce(const Matrix<F>& m) {
  return echelon(m).reduced;
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return echelon(m).rank();
}

/// Some x with a·x = rhs (free variables set to zero), or nullopt.
template <Field F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& rhs) {
  if (a.rows() != rhs.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: row counts");
  const auto e = echelon(hcat(a, rhs));
  Matrix<F> x(a.cols(), rhs.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const std::size_t pc = e.pivots[i];
    if (pc >= a.cols()) return std::nullopt;
    for (std::size_t k = 0; k < rhs.cols(); ++k) x(pc, k) = e.reduced(i, a.cols() + k);
  }
  return x;
}

}  // namespace tracelab
