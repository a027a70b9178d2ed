#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tracelab/algebra.hpp"
#include "tracelab/error.hpp"
#include "tracelab/field.hpp"
#include "tracelab/matrix.hpp"
#include "tracelab/subspace.hpp"

namespace tracelab {

/// A finite-dimensional R-module, given by commuting operators for the
/// algebra generators. Copies share the same immutable data.
template <Field F>
class ModuleRep {
 public:
  struct Data {
    ArtinAlgebra<F> algebra;
    std::vector<Matrix<F>> actions;
    std::vector<Matrix<F>> basis_actions;
    std::size_t dim;
  };

  /// Validates commutativity and that every relation acts as zero.
  static ModuleRep from_actions(const ArtinAlgebra<F>& algebra, std::vector<Matrix<F>> actions,
                                bool validate = true) {
    if (actions.size() != algebra.num_variables()) {
      throw Error(ErrorKind::DimensionMismatch, "one action matrix per algebra generator");
    }
    const std::size_t n = actions.empty() ? 0 : actions.front().rows();
    for (const auto& a : actions)
      if (a.rows() != n || a.cols() != n)
        throw Error(ErrorKind::DimensionMismatch, "action matrices must be square and equal");
    return from_actions(algebra, std::move(actions), n, validate);
  }

  static ModuleRep from_actions(const ArtinAlgebra<F>& algebra, std::vector<Matrix<F>> actions,
                                std::size_t n, bool validate) {
    if (validate) {
      for (std::size_t i = 0; i < actions.size(); ++i)
        for (std::size_t j = i + 1; j < actions.size(); ++j)
          if (!(actions[i] * actions[j] == actions[j] * actions[i]))
            throw Error(ErrorKind::InvalidArgument, "module actions do not commute");
      for (const auto& rel : algebra.relations())
        if (!evaluate_polynomial<F>(rel, actions, n).is_zero())
          throw Error(ErrorKind::InvalidArgument, "a relation of the algebra does not act as 0");
    }
    std::vector<Matrix<F>> basis_actions;
    for (const auto& e : algebra.basis()) {
      Matrix<F> m = Matrix<F>::identity(n);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) m = actions[i] * m;
      basis_actions.push_back(std::move(m));
    }
    return ModuleRep(std::make_shared<const Data>(
        Data{algebra, std::move(actions), std::move(basis_actions), n}));
  }

  std::size_t dim() const { return data_->dim; }
  const ArtinAlgebra<F>& algebra() const { return data_->algebra; }
  const std::vector<Matrix<F>>& actions() const { return data_->actions; }
  const Matrix<F>& action(std::size_t i) const { return data_->actions.at(i); }
  const Matrix<F>& basis_action(std::size_t j) const { return data_->basis_actions.at(j); }

  /// Operator of r ∈ R on the module.
  Matrix<F> act(std::span<const F> r) const {
    Matrix<F> out(dim(), dim());
    for (std::size_t j = 0; j < r.size(); ++j)
      if (!r[j].is_zero()) out += data_->basis_actions[j] * r[j];
    return out;
  }

  Vector<F> act(std::span<const F> r, std::span<const F> v) const { return act(r).apply(v); }

  bool same_as(const ModuleRep& o) const { return data_ == o.data_; }

  /// Same algebra and identical action matrices.
  friend bool operator==(const ModuleRep& a, const ModuleRep& b) {
    return a.algebra().same_as(b.algebra()) && a.dim() == b.dim() && a.actions() == b.actions();
  }

 private:
  explicit ModuleRep(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

template <Field F>
bool is_action_closed(std::span<const Matrix<F>> actions, const Subspace<F>& s) {
  for (const auto& a : actions)
    if (!contains(s, image(a, s))) return false;
  return true;
}

/// An ideal of R, i.e. an action-closed subspace of the regular module.
template <Field F>
class Ideal {
 public:
  Ideal(const ArtinAlgebra<F>& algebra, Subspace<F> carrier)
      : algebra_(algebra), carrier_(std::move(carrier)) {
    if (carrier_.ambient_dim() != algebra_.dim())
      throw Error(ErrorKind::DimensionMismatch, "ideal carrier lives outside R");
    if (!is_action_closed<F>(algebra_.generators(), carrier_))
      throw Error(ErrorKind::NotSubmodule, "subspace is not an ideal");
  }

  const ArtinAlgebra<F>& algebra() const { return algebra_; }
  const Subspace<F>& carrier() const { return carrier_; }
  std::size_t dim() const { return carrier_.dim(); }
  bool is_zero() const { return carrier_.is_zero(); }
  bool is_unit() const { return carrier_.is_full(); }
  /// k-basis of I, as elements of R.
  Vector<F> element(std::size_t j) const { return carrier_.vector(j); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.algebra_.same_as(b.algebra_) && a.carrier_ == b.carrier_;
  }

 private:
  ArtinAlgebra<F> algebra_;
  Subspace<F> carrier_;
};

/// An action-closed subspace of a ModuleRep.
template <Field F>
class Submodule {
 public:
  Submodule(const ModuleRep<F>& module, Subspace<F> carrier)
      : module_(module), carrier_(std::move(carrier)) {
    if (carrier_.ambient_dim() != module_.dim())
      throw Error(ErrorKind::DimensionMismatch, "submodule carrier lives outside the module");
    if (!is_action_closed<F>(module_.actions(), carrier_))
      throw Error(ErrorKind::NotSubmodule, "subspace is not closed under the action");
  }

  const ModuleRep<F>& module() const { return module_; }
  const Subspace<F>& carrier() const { return carrier_; }
  std::size_t dim() const { return carrier_.dim(); }
  bool is_zero() const { return carrier_.is_zero(); }

  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.module_.same_as(b.module_) && a.carrier_ == b.carrier_;
  }

 private:
  ModuleRep<F> module_;
  Subspace<F> carrier_;
};

namespace detail {

template <Field F>
void check_algebra(const ArtinAlgebra<F>& a, const ArtinAlgebra<F>& b) {
  if (!a.same_as(b)) throw Error(ErrorKind::AlgebraMismatch, "objects over different algebras");
}

template <Field F>
void check_module(const ModuleRep<F>& m, const Submodule<F>& u) {
  if (!u.module().same_as(m)) throw Error(ErrorKind::NotSubmodule, "submodule of another module");
}

/// Smallest action-closed subspace containing s.
template <Field F>
Subspace<F> close_under(std::span<const Matrix<F>> actions, Subspace<F> s) {
  for (;;) {
    Subspace<F> next = s;
    for (const auto& a : actions) next = sum(next, image(a, s));
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

}  // namespace detail

template <Field F>
ModuleRep<F> regular_module(const ArtinAlgebra<F>& R) {
  return ModuleRep<F>::from_actions(R, R.generators(), R.dim(), false);
}

template <Field F>
ModuleRep<F> direct_sum(const ModuleRep<F>& a, const ModuleRep<F>& b) {
  detail::check_algebra(a.algebra(), b.algebra());
  std::vector<Matrix<F>> actions;
  for (std::size_t i = 0; i < a.actions().size(); ++i)
    actions.push_back(block_diagonal(a.action(i), b.action(i)));
  return ModuleRep<F>::from_actions(a.algebra(), std::move(actions), a.dim() + b.dim(), false);
}

template <Field F>
ModuleRep<F> free_module(const ArtinAlgebra<F>& R, std::size_t rank) {
  std::vector<Matrix<F>> actions;
  for (const auto& g : R.generators()) {
    Matrix<F> big(R.dim() * rank, R.dim() * rank);
    for (std::size_t b = 0; b < rank; ++b)
      for (std::size_t i = 0; i < R.dim(); ++i)
        for (std::size_t j = 0; j < R.dim(); ++j) big(b * R.dim() + i, b * R.dim() + j) = g(i, j);
    actions.push_back(std::move(big));
  }
  return ModuleRep<F>::from_actions(R, std::move(actions), R.dim() * rank, false);
}

template <Field F>
Submodule<F> span_submodule(const ModuleRep<F>& M, std::span<const Vector<F>> vectors) {
  auto s = detail::close_under<F>(M.actions(), Subspace<F>::span(M.dim(), vectors));
  return Submodule<F>(M, std::move(s));
}

template <Field F>
Submodule<F> whole(const ModuleRep<F>& M) {
  return Submodule<F>(M, Subspace<F>::full(M.dim()));
}

template <Field F>
Submodule<F> zero_submodule(const ModuleRep<F>& M) {
  return Submodule<F>(M, Subspace<F>(M.dim()));
}

template <Field F>
Ideal<F> ideal_from_elements(const ArtinAlgebra<F>& R, std::span<const Vector<F>> gens) {
  auto s = detail::close_under<F>(R.generators(), Subspace<F>::span(R.dim(), gens));
  return Ideal<F>(R, std::move(s));
}

/// Ideal generated by polynomials given as text.
template <Field F>
Ideal<F> ideal_from_polynomials(const ArtinAlgebra<F>& R, std::span<const std::string> gens) {
  std::vector<Vector<F>> v;
  for (const auto& g : gens) v.push_back(R.element(g));
  return ideal_from_elements<F>(R, v);
}

template <Field F>
Ideal<F> zero_ideal(const ArtinAlgebra<F>& R) {
  return Ideal<F>(R, Subspace<F>(R.dim()));
}

template <Field F>
Ideal<F> unit_ideal(const ArtinAlgebra<F>& R) {
  return Ideal<F>(R, Subspace<F>::full(R.dim()));
}

template <Field F>
Ideal<F> maximal_ideal(const ArtinAlgebra<F>& R) {
  return Ideal<F>(R, R.maximal_ideal());
}

template <Field F>
Submodule<F> as_submodule(const Ideal<F>& I, const ModuleRep<F>& regular) {
  detail::check_algebra(I.algebra(), regular.algebra());
  return Submodule<F>(regular, I.carrier());
}

/// M = Rⁿ / (R-span of the columns of P). `rows[g][c]` is the entry of P in
/// generator row g and relation column c.
template <Field F>
ModuleRep<F> module_from_presentation(const ArtinAlgebra<F>& R,
                                      const std::vector<std::vector<Vector<F>>>& rows,
                                      std::size_t n_gens);

/// U viewed as a module in its own canonical basis.
template <Field F>
ModuleRep<F> restrict_to(const Submodule<F>& U) {
  const auto& B = U.carrier().basis();
  std::vector<Matrix<F>> actions;
  for (const auto& a : U.module().actions()) {
    auto x = solve(B, a * B);
    ensure(x.has_value(), "restriction of a closed subspace must exist");
    actions.push_back(std::move(*x));
  }
  return ModuleRep<F>::from_actions(U.module().algebra(), std::move(actions), U.dim(), false);
}

template <Field F>
ModuleRep<F> ideal_module(const Ideal<F>& I) {
  return restrict_to(as_submodule(I, regular_module(I.algebra())));
}

/// M/U with the canonical projection and a linear section.
template <Field F>
struct Quotient {
  ModuleRep<F> module;
  Matrix<F> projection;  ///< dim(M/U) × dim(M)
  Matrix<F> section;     ///< dim(M) × dim(M/U), projection·section = 1
};

template <Field F>
Quotient<F> quotient(const Submodule<F>& U) {
  const auto& M = U.module();
  const auto& C = U.carrier();
  const auto free = C.free_rows();
  const std::size_t q = free.size();
  // x = C·a + D·b with a = x[pivots]; b = x[free] − C[free,:]·a.
  Matrix<F> proj(q, M.dim());
  const Matrix<F> cfree = C.basis().select_rows(free);
  for (std::size_t j = 0; j < q; ++j) proj(j, free[j]) = F(1);
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t k = 0; k < C.dim(); ++k)
      if (!cfree(j, k).is_zero()) proj(j, C.pivots()[k]) -= cfree(j, k);
  Matrix<F> section = C.complement_basis();
  std::vector<Matrix<F>> actions;
  for (const auto& a : M.actions()) actions.push_back(proj * a * section);
  return {ModuleRep<F>::from_actions(M.algebra(), std::move(actions), q, false), std::move(proj),
          std::move(section)};
}

template <Field F>
ModuleRep<F> module_from_presentation(const ArtinAlgebra<F>& R,
                                      const std::vector<std::vector<Vector<F>>>& rows,
                                      std::size_t n_gens) {
  if (rows.size() != n_gens && !(rows.empty())) {
    throw Error(ErrorKind::DimensionMismatch, "presentation needs one row per generator");
  }
  const std::size_t d = R.dim();
  const auto free = free_module(R, n_gens);
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Vector<F>> columns;
  for (std::size_t c = 0; c < cols; ++c) {
    Vector<F> v(d * n_gens);
    for (std::size_t g = 0; g < n_gens; ++g) {
      if (rows[g].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged presentation");
      for (std::size_t t = 0; t < d; ++t) v[g * d + t] = rows[g][c][t];
    }
    columns.push_back(std::move(v));
  }
  return quotient(span_submodule<F>(free, columns)).module;
}

/// Same, with polynomial entries given as text.
template <Field F>
ModuleRep<F> module_from_presentation(const ArtinAlgebra<F>& R,
                                      const std::vector<std::vector<std::string>>& rows,
                                      std::size_t n_gens) {
  std::vector<std::vector<Vector<F>>> values;
  for (const auto& row : rows) {
    std::vector<Vector<F>> r;
    for (const auto& entry : row) r.push_back(R.element(entry));
    values.push_back(std::move(r));
  }
  return module_from_presentation<F>(R, values, n_gens);
}

template <Field F>
Quotient<F> quotient(const ModuleRep<F>& M, const Submodule<F>& U) {
  detail::check_module(M, U);
  return quotient(U);
}

/// I·U for a submodule U of M.
template <Field F>
Submodule<F> ideal_times_submodule(const Ideal<F>& I, const Submodule<F>& U) {
  const auto& M = U.module();
  detail::check_algebra(I.algebra(), M.algebra());
  std::vector<Matrix<F>> blocks;
  Matrix<F> all(M.dim(), 0);
  for (std::size_t b = 0; b < I.dim(); ++b)
    all = hcat(all, M.act(I.element(b)) * U.carrier().basis());
  return Submodule<F>(M, Subspace<F>::span(all));
}

/// IM
template <Field F>
Submodule<F> ideal_times_module(const Ideal<F>& I, const ModuleRep<F>& M) {
  return ideal_times_submodule(I, whole(M));
}

/// M[I] = {x ∈ M : Ix = 0}
template <Field F>
Submodule<F> kill(const ModuleRep<F>& M, const Ideal<F>& I) {
  detail::check_algebra(I.algebra(), M.algebra());
  if (I.is_zero()) return whole(M);
  std::vector<Matrix<F>> blocks;
  for (std::size_t b = 0; b < I.dim(); ++b) blocks.push_back(M.act(I.element(b)));
  return Submodule<F>(M, kernel(vstack<F>(blocks, M.dim())));
}

/// (N :_M I) = {x ∈ M : Ix ⊆ N}
template <Field F>
Submodule<F> colon(const Submodule<F>& N, const Ideal<F>& I) {
  const auto& M = N.module();
  detail::check_algebra(I.algebra(), M.algebra());
  if (I.is_zero()) return whole(M);
  const Matrix<F> perp = perp_rows(N.carrier());
  std::vector<Matrix<F>> blocks;
  for (std::size_t b = 0; b < I.dim(); ++b) blocks.push_back(perp * M.act(I.element(b)));
  return Submodule<F>(M, kernel(vstack<F>(blocks, M.dim())));
}

/// Ann_R(M)
template <Field F>
Ideal<F> annihilator(const ModuleRep<F>& M) {
  const auto& R = M.algebra();
  const std::size_t n = M.dim();
  Matrix<F> sys(n * n, R.dim());
  for (std::size_t j = 0; j < R.dim(); ++j) {
    const auto& a = M.basis_action(j);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) sys(r * n + c, j) = a(r, c);
  }
  return Ideal<F>(R, kernel(sys));
}

/// Ann_R(I) = R[I]
template <Field F>
Ideal<F> annihilator(const Ideal<F>& I) {
  return Ideal<F>(I.algebra(), kill(regular_module(I.algebra()), I).carrier());
}

/// So(M) = M[m]
template <Field F>
Submodule<F> socle(const ModuleRep<F>& M) {
  return kill(M, maximal_ideal(M.algebra()));
}

/// P(M): the stable value of mⁿM.
template <Field F>
Submodule<F> radical_part(const ModuleRep<F>& M) {
  const auto m = maximal_ideal(M.algebra());
  Submodule<F> u = whole(M);
  for (std::size_t step = 0; step <= M.dim() + 1; ++step) {
    Submodule<F> next = ideal_times_submodule(m, u);
    if (next == u) return u;
    u = std::move(next);
  }
  throw Error(ErrorKind::Internal, "mⁿM did not stabilise within dim M steps");
}

template <Field F>
struct MinimalGenerators {
  std::size_t count;
  std::vector<Vector<F>> lifted;  ///< representatives in M of a basis of M/mM
};

/// v(M) = dim M/mM with lifted generators.
template <Field F>
MinimalGenerators<F> min_gens(const ModuleRep<F>& M) {
  const auto mM = ideal_times_module(maximal_ideal(M.algebra()), M);
  const auto rows = mM.carrier().free_rows();
  std::vector<Vector<F>> lifted;
  for (auto r : rows) {
    Vector<F> v(M.dim());
    v[r] = F(1);
    lifted.push_back(std::move(v));
  }
  return {rows.size(), std::move(lifted)};
}

template <Field F>
std::size_t min_gens(const Ideal<F>& I) {
  return min_gens(ideal_module(I)).count;
}

template <Field F>
bool is_cyclic(const Ideal<F>& I) {
  return min_gens(I) <= 1;
}

/// U is essential in M iff So(M) ⊆ U (finite length).
template <Field F>
bool is_essential(const Submodule<F>& U) {
  return contains(U.carrier(), socle(U.module()).carrier());
}

/// U is small in M iff U ⊆ mM (finite length).
template <Field F>
bool is_small(const Submodule<F>& U) {
  const auto mM = ideal_times_module(maximal_ideal(U.module().algebra()), U.module());
  return contains(mM.carrier(), U.carrier());
}

template <Field F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  detail::check_algebra(a.algebra(), b.algebra());
  return Ideal<F>(a.algebra(), sum(a.carrier(), b.carrier()));
}

template <Field F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b) {
  const auto R = regular_module(a.algebra());
  return Ideal<F>(a.algebra(), ideal_times_submodule(a, as_submodule(b, R)).carrier());
}

/// (I :_R a)
template <Field F>
Ideal<F> ideal_colon(const Ideal<F>& I, const Ideal<F>& a) {
  const auto R = regular_module(I.algebra());
  return Ideal<F>(I.algebra(), colon(as_submodule(I, R), a).carrier());
}

template <Field F>
Ideal<F> principal_ideal(const ArtinAlgebra<F>& R, const Vector<F>& r) {
  return ideal_from_elements<F>(R, std::span<const Vector<F>>(&r, 1));
}

/// Smallest N with mᴺ = 0.
template <Field F>
std::size_t loewy_length(const ArtinAlgebra<F>& R) {
  const auto M = regular_module(R);
  const auto m = maximal_ideal(R);
  Submodule<F> u = whole(M);
  std::size_t n = 0;
  while (!u.is_zero()) {
    u = ideal_times_submodule(m, u);
    ++n;
    ensure(n <= R.dim(), "maximal ideal is not nilpotent");
  }
  return n;
}

}  // namespace tracelab
