#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tracelab/module.hpp"

namespace tracelab {

/// Hom_R(M, N) as the solution space of Φ·Bᵢᴹ = Bᵢᴺ·Φ. Maps are
/// dim N × dim M matrices, vectorised column by column.
template <Field F>
class HomModule {
 public:
  HomModule(const ModuleRep<F>& source, const ModuleRep<F>& target)
      : source_(source), target_(target) {
    detail::check_algebra(source.algebra(), target.algebra());
    const std::size_t m = source.dim();
    const std::size_t n = target.dim();
    if (m == 0 || n == 0) {
      solutions_ = Subspace<F>(m * n);
      return;
    }
    std::vector<Matrix<F>> blocks;
    const auto im = Matrix<F>::identity(m);
    const auto in = Matrix<F>::identity(n);
    for (std::size_t i = 0; i < source.actions().size(); ++i)
      blocks.push_back(kron(source.action(i).transpose(), in) - kron(im, target.action(i)));
    solutions_ = blocks.empty() ? Subspace<F>::full(m * n) : kernel(vstack<F>(blocks, m * n));
    for (std::size_t j = 0; j < solutions_.dim(); ++j) basis_.push_back(unvec(solutions_.vector(j)));
  }

  const ModuleRep<F>& source() const { return source_; }
  const ModuleRep<F>& target() const { return target_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix<F>>& basis() const { return basis_; }
  const Subspace<F>& solutions() const { return solutions_; }

  Vector<F> vec(const Matrix<F>& phi) const {
    Vector<F> v(phi.rows() * phi.cols());
    for (std::size_t c = 0; c < phi.cols(); ++c)
      for (std::size_t r = 0; r < phi.rows(); ++r) v[c * phi.rows() + r] = phi(r, c);
    return v;
  }

  Matrix<F> unvec(const Vector<F>& v) const {
    const std::size_t n = target_.dim();
    Matrix<F> phi(n, source_.dim());
    for (std::size_t c = 0; c < source_.dim(); ++c)
      for (std::size_t r = 0; r < n; ++r) phi(r, c) = v[c * n + r];
    return phi;
  }

  /// Coordinates of Φ in the canonical basis, or nullopt if Φ is no
  /// homomorphism.
  std::optional<Vector<F>> coordinates(const Matrix<F>& phi) const {
    return solutions_.coordinates(vec(phi));
  }

  /// Hom(M, N) as an R-module: xᵢ acts by Φ ↦ Bᵢᴺ·Φ.
  ModuleRep<F> as_module() const {
    std::vector<Matrix<F>> actions;
    const auto& B = solutions_.basis();
    const auto im = Matrix<F>::identity(source_.dim());
    for (const auto& b : target_.actions()) {
      Matrix<F> big = kron(im, b) * B;
      Matrix<F> a(dim(), dim());
      for (std::size_t j = 0; j < dim(); ++j) {
        auto c = solutions_.coordinates(big.column(j));
        ensure(c.has_value(), "Hom is not closed under the target action");
        for (std::size_t i = 0; i < dim(); ++i) a(i, j) = (*c)[i];
      }
      actions.push_back(std::move(a));
    }
    return ModuleRep<F>::from_actions(source_.algebra(), std::move(actions), dim(), false);
  }

 private:
  ModuleRep<F> source_;
  ModuleRep<F> target_;
  Subspace<F> solutions_;
  std::vector<Matrix<F>> basis_;
};

template <Field F>
HomModule<F> hom_module(const ModuleRep<F>& M, const ModuleRep<F>& N) {
  return HomModule<F>(M, N);
}

/// M° = Hom_k(M, k) with xᵢ acting by Bᵢᵀ; paired with M by the dot product
/// of coordinate vectors. Since (Bᵀ)ᵀ = B, M°° is M again.
template <Field F>
ModuleRep<F> matlis_dual(const ModuleRep<F>& M) {
  std::vector<Matrix<F>> actions;
  for (const auto& b : M.actions()) actions.push_back(b.transpose());
  return ModuleRep<F>::from_actions(M.algebra(), std::move(actions), M.dim(), false);
}

/// Ann_{M°}(U) = {φ ∈ M° : φ(U) = 0}, given M° = matlis_dual(U.module()).
template <Field F>
Submodule<F> ann_in_dual(const Submodule<F>& U, const ModuleRep<F>& dual) {
  if (dual.dim() != U.module().dim()) {
    throw Error(ErrorKind::DimensionMismatch, "dual has the wrong dimension");
  }
  return Submodule<F>(dual, kernel(U.carrier().basis().transpose()));
}

/// M ⊗_R N as a quotient of M ⊗_k N (index i·dim N + k for eᵢ ⊗ f_k).
template <Field F>
Quotient<F> tensor_product(const ModuleRep<F>& M, const ModuleRep<F>& N) {
  detail::check_algebra(M.algebra(), N.algebra());
  const std::size_t m = M.dim();
  const std::size_t n = N.dim();
  const auto im = Matrix<F>::identity(m);
  const auto in = Matrix<F>::identity(n);
  std::vector<Matrix<F>> actions;
  Matrix<F> relations(m * n, 0);
  for (std::size_t i = 0; i < M.actions().size(); ++i) {
    Matrix<F> left = kron(M.action(i), in);
    relations = hcat(relations, left - kron(im, N.action(i)));
    actions.push_back(std::move(left));
  }
  const auto big = ModuleRep<F>::from_actions(M.algebra(), std::move(actions), m * n, false);
  return quotient(Submodule<F>(big, Subspace<F>::span(relations)));
}

}  // namespace tracelab
