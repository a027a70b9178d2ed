#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tracelab/error.hpp"
#include "tracelab/field.hpp"
#include "tracelab/matrix.hpp"

namespace tracelab {

/// A linear subspace of F^n. The basis is stored as the columns of a matrix
/// in reduced column echelon form, so two Subspace values compare equal
/// exactly when they are the same subspace.
template <Field F>
class Subspace {
 public:
  Subspace() = default;

  /// The zero subspace of F^ambient.
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}

  static Subspace full(std::size_t ambient) { return span(Matrix<F>::identity(ambient)); }

  /// Column span of `columns`.
  static Subspace span(const Matrix<F>& columns) {
    auto e = echelon(columns.transpose());
    Subspace s(columns.rows());
    s.pivots_ = e.pivots;
    s.basis_ = Matrix<F>(columns.rows(), e.rank());
    for (std::size_t j = 0; j < e.rank(); ++j)
      for (std::size_t i = 0; i < columns.rows(); ++i) s.basis_(i, j) = e.reduced(j, i);
    return s;
  }

  static Subspace span(std::size_t ambient, std::span<const Vector<F>> vectors) {
    return span(Matrix<F>::from_columns(ambient, vectors));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  bool is_zero() const { return pivots_.empty(); }
  bool is_full() const { return dim() == ambient_; }

  /// ambient × dim matrix, columns are the canonical basis.
  const Matrix<F>& basis() const { return basis_; }
  Vector<F> vector(std::size_t j) const { return basis_.column(j); }
  /// Row index holding the leading 1 of each basis column.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coordinates of v in the canonical basis, or nullopt if v is not in the
  /// subspace.
  std::optional<Vector<F>> coordinates(std::span<const F> v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length");
    Vector<F> a(dim());
    for (std::size_t j = 0; j < dim(); ++j) a[j] = v[pivots_[j]];
    const auto back = basis_.apply(a);
    for (std::size_t i = 0; i < ambient_; ++i)
      if (!(back[i] == v[i])) return std::nullopt;
    return a;
  }

  bool contains(std::span<const F> v) const { return coordinates(v).has_value(); }

  /// Rows that carry no pivot; their unit vectors span a complement.
  std::vector<std::size_t> free_rows() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < ambient_; ++i) {
      if (k < pivots_.size() && pivots_[k] == i) {
        ++k;
      } else {
        out.push_back(i);
      }
    }
    return out;
  }

  /// ambient × (ambient − dim) matrix of unit vectors spanning a complement.
  Matrix<F> complement_basis() const {
    const auto rows = free_rows();
    Matrix<F> c(ambient_, rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) c(rows[j], j) = F(1);
    return c;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.pivots_ != b.pivots_) return a.pivots_ < b.pivots_;
    const auto x = a.basis_.entries();
    const auto y = b.basis_.entries();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }

 private:
  std::size_t ambient_ = 0;
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m·v = 0}.
template <Field F>
Subspace<F> kernel(const Matrix<F>& m) {
  const auto e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector<F>> vectors;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector<F> v(m.cols());
    v[f] = F(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    vectors.push_back(std::move(v));
  }
  return Subspace<F>::span(m.cols(), vectors);
}

namespace detail {
template <Field F>
void check_ambient(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "subspaces live in different ambient spaces");
  }
}
}  // namespace detail

template <Field F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
  detail::check_ambient(a, b);
  return Subspace<F>::span(hcat(a.basis(), b.basis()));
}

template <Field F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  detail::check_ambient(a, b);
  if (a.is_zero() || b.is_zero()) return Subspace<F>(a.ambient_dim());
  Matrix<F> neg_b = b.basis() * F(-1);
  const auto k = kernel(hcat(a.basis(), neg_b));
  // The first dim(a) coordinates of each kernel vector give a point of a ∩ b.
  Matrix<F> pts(a.ambient_dim(), k.dim());
  for (std::size_t j = 0; j < k.dim(); ++j) {
    Vector<F> x(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) x[i] = k.basis()(i, j);
    const auto p = a.basis().apply(x);
    for (std::size_t i = 0; i < p.size(); ++i) pts(i, j) = p[i];
  }
  return Subspace<F>::span(pts);
}

/// outer ⊇ inner
template <Field F>
bool contains(const Subspace<F>& outer, const Subspace<F>& inner) {
  detail::check_ambient(outer, inner);
  for (std::size_t j = 0; j < inner.dim(); ++j)
    if (!outer.contains(inner.vector(j))) return false;
  return true;
}

/// m(U)
template <Field F>
Subspace<F> image(const Matrix<F>& m, const Subspace<F>& u) {
  if (m.cols() != u.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "image shape");
  return Subspace<F>::span(m * u.basis());
}

template <Field F>
Subspace<F> column_space(const Matrix<F>& m) {
  return Subspace<F>::span(m);
}

/// Rows spanning the annihilator of U: U = {v : perp·v = 0}.
template <Field F>
Matrix<F> perp_rows(const Subspace<F>& u) {
  return kernel(u.basis().transpose()).basis().transpose();
}

/// {v : m·v ∈ U}
template <Field F>
Subspace<F> preimage(const Matrix<F>& m, const Subspace<F>& u) {
  if (m.rows() != u.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "preimage shape");
  return kernel(perp_rows(u) * m);
}

/// Every vector of U; only meaningful over a finite field.
template <FiniteField F>
std::vector<Vector<F>> elements(const Subspace<F>& u, std::size_t cap) {
  const auto values = F::elements();
  std::size_t count = 1;
  for (std::size_t j = 0; j < u.dim(); ++j) {
    count *= values.size();
    if (count > cap) throw Error(ErrorKind::EnumerationCapExceeded, "subspace too large to list");
  }
  std::vector<Vector<F>> out;
  out.reserve(count);
  std::vector<std::size_t> digits(u.dim(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    Vector<F> coeff(u.dim());
    for (std::size_t j = 0; j < u.dim(); ++j) coeff[j] = values[digits[j]];
    out.push_back(u.basis().apply(coeff));
    for (std::size_t j = 0; j < u.dim(); ++j) {
      if (++digits[j] < values.size()) break;
      digits[j] = 0;
    }
  }
  return out;
}

}  // namespace tracelab
