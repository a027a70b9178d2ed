#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tracelab/error.hpp"
#include "tracelab/field.hpp"
#include "tracelab/matrix.hpp"
#include "tracelab/polynomial.hpp"
#include "tracelab/subspace.hpp"

namespace tracelab {

/// k[x₁..xₙ]/I given by relation polynomials. The quotient is read in the
/// local ring at the origin, so it must be m-primary.
struct PolynomialPresentation {
  std::string field = "Q";
  std::vector<std::string> variables;
  std::vector<std::string> relations;
  /// Source position of each relation, for error messages (optional).
  std::vector<std::size_t> relation_lines;
  std::vector<std::size_t> relation_columns;
  unsigned degree_cap = 24;
  std::size_t dimension_cap = 512;
};

namespace detail {

template <Field F>
std::map<Exponents, F> to_field(const Polynomial& p) {
  std::map<Exponents, F> out;
  for (const auto& [e, c] : p.terms()) {
    F v = F::from_integer(c);
    if (!v.is_zero()) out.emplace(e, v);
  }
  return out;
}

inline void monomials_up_to(std::size_t nvars, unsigned degree, std::vector<Exponents>& out) {
  Exponents e(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned left) {
    if (var + 1 == nvars) {
      for (unsigned k = 0; k <= left; ++k) {
        e[var] = k;
        out.push_back(e);
      }
      e[var] = 0;
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[var] = k;
      rec(var + 1, left - k);
    }
    e[var] = 0;
  };
  if (nvars == 0) {
    out.push_back(e);
    return;
  }
  rec(0, degree);
}

/// Incremental sparse echelon basis; a row's pivot is its largest column.
template <Field F>
class SparseEchelon {
 public:
  using Row = std::map<std::size_t, F, std::greater<>>;

  /// Eliminates every pivot column from `row`.
  void reduce(Row& row) const {
    auto it = row.begin();
    while (it != row.end()) {
      const std::size_t col = it->first;
      auto p = pivots_.find(col);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      const F factor = it->second;
      for (const auto& [c, v] : p->second) {
        auto [slot, fresh] = row.try_emplace(c, F(0));
        slot->second.sub_mul(factor, v);
        if (slot->second.is_zero()) row.erase(slot);
      }
      it = row.upper_bound(col);
    }
  }

  void insert(Row row) {
    std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
    reduce(row);
    if (row.empty()) return;
    const F inv = row.begin()->second.inverse();
    for (auto& [c, v] : row) v *= inv;
    const std::size_t lead = row.begin()->first;
    pivots_.emplace(lead, std::move(row));
  }

  bool is_pivot(std::size_t col) const { return pivots_.count(col) != 0; }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, Row> pivots_;
};

}  // namespace detail

/// A finite-dimensional commutative local k-algebra with residue field k,
/// realised by its multiplication operators on a monomial basis. Cheap to
/// copy; copies share the same immutable data.
template <Field F>
class ArtinAlgebra {
 public:
  using Scalar = F;

  struct Data {
    PolynomialPresentation presentation;
    std::vector<Polynomial> relations;
    std::vector<Exponents> basis;
    std::vector<Matrix<F>> generators;
    std::vector<Matrix<F>> basis_actions;
    Subspace<F> maximal;
  };

  static ArtinAlgebra build(const PolynomialPresentation& pres);

  std::size_t dim() const { return data_->basis.size(); }
  std::size_t num_variables() const { return data_->generators.size(); }
  const std::vector<std::string>& variables() const { return data_->presentation.variables; }
  const PolynomialPresentation& presentation() const { return data_->presentation; }
  const std::vector<Polynomial>& relations() const { return data_->relations; }
  const std::vector<Exponents>& basis() const { return data_->basis; }
  const Matrix<F>& generator(std::size_t i) const { return data_->generators.at(i); }
  const std::vector<Matrix<F>>& generators() const { return data_->generators; }
  /// Multiplication by the j-th basis monomial.
  const Matrix<F>& basis_action(std::size_t j) const { return data_->basis_actions.at(j); }
  const Subspace<F>& maximal_ideal() const { return data_->maximal; }

  std::string basis_label(std::size_t j) const {
    Polynomial p(num_variables());
    p += Polynomial::constant(num_variables(), 1) * monomial_poly(data_->basis.at(j));
    return p.to_string(variables());
  }

  Vector<F> unit() const {
    Vector<F> v(dim());
    v[0] = F(1);
    return v;
  }

  /// Multiplication operator of the element r.
  Matrix<F> multiplication(std::span<const F> r) const {
    Matrix<F> out(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
      if (!r[j].is_zero()) out += data_->basis_actions[j] * r[j];
    return out;
  }

  Vector<F> multiply(std::span<const F> a, std::span<const F> b) const {
    return multiplication(a).apply(b);
  }

  /// Image of an integer polynomial in R.
  Vector<F> element(const Polynomial& p) const {
    Vector<F> out(dim());
    for (const auto& [e, c] : p.terms()) {
      const F coeff = F::from_integer(c);
      if (coeff.is_zero()) continue;
      Vector<F> v = unit();
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) v = data_->generators[i].apply(v);
      for (std::size_t t = 0; t < dim(); ++t)
        if (!v[t].is_zero()) out[t] += coeff * v[t];
    }
    return out;
  }

  Vector<F> element(std::string_view text) const {
    return element(parse_polynomial(text, variables()));
  }

  bool same_as(const ArtinAlgebra& o) const { return data_ == o.data_; }

 private:
  explicit ArtinAlgebra(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  Polynomial monomial_poly(const Exponents& e) const {
    Polynomial p = Polynomial::constant(num_variables(), 1);
    for (std::size_t i = 0; i < e.size(); ++i)
      p = p * Polynomial::variable(num_variables(), i).pow(e[i]);
    return p;
  }

  std::shared_ptr<const Data> data_;
};

/// Σ c·M^e over the terms of p, with M the tuple of commuting operators.
template <Field F>
Matrix<F> evaluate_polynomial(const Polynomial& p, std::span<const Matrix<F>> operators,
                              std::size_t n) {
  Matrix<F> out(n, n);
  for (const auto& [e, c] : p.terms()) {
    const F coeff = F::from_integer(c);
    if (coeff.is_zero()) continue;
    Matrix<F> m = Matrix<F>::identity(n);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) m = operators[i] * m;
    out += m * coeff;
  }
  return out;
}

template <Field F>
ArtinAlgebra<F> ArtinAlgebra<F>::build(const PolynomialPresentation& pres) {
  if (pres.field != F::name()) {
    throw Error(ErrorKind::InvalidArgument,
                "presentation is over " + pres.field + ", expected " + F::name());
  }
  const std::size_t nvars = pres.variables.size();
  for (std::size_t i = 0; i < nvars; ++i) {
    for (std::size_t j = i + 1; j < nvars; ++j)
      if (pres.variables[i] == pres.variables[j])
        throw Error(ErrorKind::ParseError, "duplicate variable '" + pres.variables[i] + "'");
  }

  auto data = std::make_shared<Data>();
  data->presentation = pres;
  std::vector<std::map<Exponents, F>> rels;
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    const std::size_t line = r < pres.relation_lines.size() ? pres.relation_lines[r] : 1;
    const std::size_t column = r < pres.relation_columns.size() ? pres.relation_columns[r] : 0;
    Polynomial p = parse_polynomial(pres.relations[r], pres.variables, line, column);
    auto fp = detail::to_field<F>(p);
    if (fp.count(Exponents(nvars, 0)) != 0) {
      throw Error(ErrorKind::ResidueFieldMismatch,
                  "relation '" + pres.relations[r] +
                      "' has a nonzero constant term; the quotient would not be local with "
                      "residue field " + F::name());
    }
    data->relations.push_back(std::move(p));
    if (!fp.empty()) rels.push_back(std::move(fp));
  }

  for (unsigned D = 1; D <= pres.degree_cap; ++D) {
    // Work in T = k[x]/m^{D+1}; R is reached once m^D ⊆ I + m^{D+1}.
    std::vector<Exponents> monos;
    detail::monomials_up_to(nvars, D, monos);
    std::sort(monos.begin(), monos.end(), graded_less);
    std::map<Exponents, std::size_t> index;
    for (std::size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], k);

    detail::SparseEchelon<F> ech;
    for (const auto& f : rels) {
      unsigned low = ~0u;
      for (const auto& [e, c] : f) low = std::min(low, total_degree(e));
      for (const auto& u : monos) {
        if (total_degree(u) + low > D) continue;
        typename detail::SparseEchelon<F>::Row row;
        for (const auto& [e, c] : f) {
          Exponents prod(nvars);
          for (std::size_t i = 0; i < nvars; ++i) prod[i] = e[i] + u[i];
          if (total_degree(prod) > D) continue;
          row[index.at(prod)] += c;
        }
        ech.insert(std::move(row));
      }
    }

    const std::size_t quotient_dim = monos.size() - ech.rank();
    if (quotient_dim > pres.dimension_cap) {
      throw Error(ErrorKind::DimensionCapExceeded,
                  "quotient dimension exceeds cap " + std::to_string(pres.dimension_cap));
    }
    bool stable = true;
    for (std::size_t k = 0; k < monos.size(); ++k) {
      if (total_degree(monos[k]) == D && !ech.is_pivot(k)) {
        stable = false;
        break;
      }
    }
    if (!stable) continue;

    std::vector<std::size_t> standard;
    for (std::size_t k = 0; k < monos.size(); ++k)
      if (!ech.is_pivot(k)) standard.push_back(k);
    // Display order: by degree, then x before y.
    std::sort(standard.begin(), standard.end(), [&](std::size_t a, std::size_t b) {
      const unsigned da = total_degree(monos[a]);
      const unsigned db = total_degree(monos[b]);
      if (da != db) return da < db;
      return monos[b] < monos[a];
    });
    std::map<std::size_t, std::size_t> position;
    for (std::size_t j = 0; j < standard.size(); ++j) {
      data->basis.push_back(monos[standard[j]]);
      position.emplace(standard[j], j);
    }
    const std::size_t d = standard.size();
    ensure(d >= 1 && total_degree(data->basis[0]) == 0, "unit is not a standard monomial");

    for (std::size_t i = 0; i < nvars; ++i) {
      Matrix<F> a(d, d);
      for (std::size_t j = 0; j < d; ++j) {
        Exponents e = data->basis[j];
        ++e[i];
        if (total_degree(e) > D) continue;
        typename detail::SparseEchelon<F>::Row row;
        row.emplace(index.at(e), F(1));
        ech.reduce(row);
        for (const auto& [col, v] : row) a(position.at(col), j) = v;
      }
      data->generators.push_back(std::move(a));
    }

    for (std::size_t j = 0; j < d; ++j) {
      Matrix<F> m = Matrix<F>::identity(d);
      for (std::size_t i = 0; i < nvars; ++i)
        for (unsigned k = 0; k < data->basis[j][i]; ++k) m = data->generators[i] * m;
      data->basis_actions.push_back(std::move(m));
    }

    Matrix<F> m_basis(d, d - 1);
    for (std::size_t j = 1; j < d; ++j) m_basis(j, j - 1) = F(1);
    data->maximal = Subspace<F>::span(m_basis);

    for (std::size_t i = 0; i < nvars; ++i)
      for (std::size_t j = i + 1; j < nvars; ++j)
        ensure(data->generators[i] * data->generators[j] ==
                   data->generators[j] * data->generators[i],
               "generator actions do not commute");
    for (const auto& rel : data->relations)
      ensure(evaluate_polynomial<F>(rel, data->generators, d).is_zero(),
             "relation does not vanish on the quotient");

    return ArtinAlgebra(std::move(data));
  }
  throw Error(ErrorKind::NotArtinian, "quotient did not stabilise by degree " +
                                          std::to_string(pres.degree_cap) +
                                          "; the relations are not m-primary");
}

template <Field F>
ArtinAlgebra<F> build_algebra(const PolynomialPresentation& pres) {
  return ArtinAlgebra<F>::build(pres);
}

}  // namespace tracelab
