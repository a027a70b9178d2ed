#pragma once

#include <cstddef>
#include <vector>

#include "tracelab/hom.hpp"
#include "tracelab/module.hpp"

namespace tracelab {

/// A k-linear map with its rank summary.
template <Field F>
struct LinearMap {
  Matrix<F> matrix;
  std::size_t rank = 0;
  bool injective = false;
  bool surjective = false;

  static LinearMap of(Matrix<F> m) {
    const std::size_t r = tracelab::rank(m);
    const bool inj = r == m.cols();
    const bool surj = r == m.rows();
    return {std::move(m), r, inj, surj};
  }
};

/// Deliberate faults for exercising the verifier.
enum class Defect { None, DropHomBasisVector };

/// γ_I(M): the sum of the images of all f ∈ Hom_R(I, M).
template <Field F>
Submodule<F> gamma(const Ideal<F>& I, const ModuleRep<F>& M, Defect defect = Defect::None) {
  detail::check_algebra(I.algebra(), M.algebra());
  const HomModule<F> H(ideal_module(I), M);
  std::size_t count = H.dim();
  if (defect == Defect::DropHomBasisVector && count > 0) --count;
  Matrix<F> images(M.dim(), 0);
  for (std::size_t j = 0; j < count; ++j) images = hcat(images, H.basis()[j]);
  return Submodule<F>(M, Subspace<F>::span(images));
}

/// κ_I(M): the intersection of the kernels of all f ∈ Hom_R(M, I°).
template <Field F>
Submodule<F> kappa(const Ideal<F>& I, const ModuleRep<F>& M) {
  detail::check_algebra(I.algebra(), M.algebra());
  const HomModule<F> H(M, matlis_dual(ideal_module(I)));
  if (H.dim() == 0) return whole(M);
  return Submodule<F>(M, kernel(vstack<F>(H.basis(), M.dim())));
}

namespace detail {

/// Matrix of x ↦ (r ↦ r·x) from the span of `domain` into Hom(I, Y).
template <Field F>
Matrix<F> multiplication_into_hom(const Ideal<F>& I, const Submodule<F>& Y,
                                  const HomModule<F>& H, const Matrix<F>& domain) {
  const auto& M = Y.module();
  std::vector<Matrix<F>> acts;
  for (std::size_t b = 0; b < I.dim(); ++b) acts.push_back(M.act(I.element(b)));
  Matrix<F> out(H.dim(), domain.cols());
  for (std::size_t t = 0; t < domain.cols(); ++t) {
    const Vector<F> x = domain.column(t);
    Matrix<F> phi(Y.dim(), I.dim());
    for (std::size_t b = 0; b < I.dim(); ++b) {
      auto c = Y.carrier().coordinates(acts[b].apply(x));
      ensure(c.has_value(), "r·x left the target submodule");
      for (std::size_t i = 0; i < Y.dim(); ++i) phi(i, b) = (*c)[i];
    }
    auto coords = H.coordinates(phi);
    ensure(coords.has_value(), "r ↦ r·x is not R-linear");
    for (std::size_t i = 0; i < H.dim(); ++i) out(i, t) = (*coords)[i];
  }
  return out;
}

}  // namespace detail

/// σ: M → Hom_R(I, IM), σ(x)(r) = rx.
template <Field F>
LinearMap<F> sigma(const Ideal<F>& I, const ModuleRep<F>& M) {
  const auto IM = ideal_times_module(I, M);
  const HomModule<F> H(ideal_module(I), restrict_to(IM));
  return LinearMap<F>::of(
      detail::multiplication_into_hom(I, IM, H, Matrix<F>::identity(M.dim())));
}

template <Field F>
struct AlphaMap {
  Submodule<F> domain;  ///< (Y :_X I)
  LinearMap<F> map;     ///< in the canonical basis of the domain
  Subspace<F> kernel;   ///< as a subspace of X
};

/// α: (Y :_X I) → Hom_R(I, Y), α(u)(r) = ru.
template <Field F>
AlphaMap<F> alpha(const Submodule<F>& Y, const Ideal<F>& I) {
  const auto C = colon(Y, I);
  const HomModule<F> H(ideal_module(I), restrict_to(Y));
  auto map = LinearMap<F>::of(detail::multiplication_into_hom(I, Y, H, C.carrier().basis()));
  const auto k = kernel(map.matrix);
  auto ker = Subspace<F>::span(C.carrier().basis() * k.basis());
  return {C, std::move(map), std::move(ker)};
}

/// Ext¹_R(R/I, M) = coker(M → Hom_R(I, M)).
template <Field F>
ModuleRep<F> ext1(const Ideal<F>& I, const ModuleRep<F>& M) {
  const HomModule<F> H(ideal_module(I), M);
  const auto hom = H.as_module();
  const auto rho =
      detail::multiplication_into_hom(I, whole(M), H, Matrix<F>::identity(M.dim()));
  return quotient(Submodule<F>(hom, Subspace<F>::span(rho))).module;
}

namespace detail {

/// eᵢ ⊗ b ↦ b·s(eᵢ) on A ⊗_k I, where s lifts A into M.
template <Field F>
Matrix<F> evaluation(const Ideal<F>& I, const ModuleRep<F>& M, const Matrix<F>& lift) {
  std::vector<Matrix<F>> acts;
  for (std::size_t b = 0; b < I.dim(); ++b) acts.push_back(M.act(I.element(b)));
  Matrix<F> out(M.dim(), lift.cols() * I.dim());
  for (std::size_t a = 0; a < lift.cols(); ++a) {
    const Vector<F> x = lift.column(a);
    for (std::size_t b = 0; b < I.dim(); ++b) {
      const auto y = acts[b].apply(x);
      for (std::size_t i = 0; i < M.dim(); ++i) out(i, a * I.dim() + b) = y[i];
    }
  }
  return out;
}

/// Pushes a map on M ⊗_k N down to the tensor quotient, checking that it
/// vanishes on the relations.
template <Field F>
Matrix<F> through_tensor(const Matrix<F>& on_kron, const Quotient<F>& t) {
  const std::size_t n = on_kron.cols();
  ensure((on_kron * (Matrix<F>::identity(n) - t.section * t.projection)).is_zero(),
         "map does not factor through the tensor product");
  return on_kron * t.section;
}

}  // namespace detail

/// β: (M/M[I]) ⊗_R I → M, β(x̄ ⊗ r) = rx.
template <Field F>
LinearMap<F> beta(const ModuleRep<F>& M, const Ideal<F>& I) {
  const auto A = quotient(kill(M, I));
  const auto T = tensor_product(A.module, ideal_module(I));
  return LinearMap<F>::of(detail::through_tensor(detail::evaluation(I, M, A.section), T));
}

/// Tor₁^R(M, R/I) = ker(M ⊗_R I → M).
template <Field F>
ModuleRep<F> tor1(const ModuleRep<F>& M, const Ideal<F>& I) {
  const auto T = tensor_product(M, ideal_module(I));
  const auto ev = detail::through_tensor(
      detail::evaluation(I, M, Matrix<F>::identity(M.dim())), T);
  return restrict_to(Submodule<F>(T.module, kernel(ev)));
}

template <Field F>
struct InjectiveEmbedding {
  ModuleRep<F> X;       ///< (R°)ⁿ
  Matrix<F> inclusion;  ///< dim X × dim M
  Submodule<F> image;
};

/// M ⊆ (R°)ⁿ with n = v(M°), dual to a free cover Rⁿ ↠ M°.
template <Field F>
InjectiveEmbedding<F> embed_into_injective(const ModuleRep<F>& M) {
  const auto& R = M.algebra();
  const auto dual = matlis_dual(M);
  const auto gens = min_gens(dual);
  const std::size_t d = R.dim();
  Matrix<F> cover(M.dim(), gens.count * d);
  for (std::size_t j = 0; j < gens.count; ++j)
    for (std::size_t t = 0; t < d; ++t) {
      const auto y = dual.basis_action(t).apply(gens.lifted[j]);
      for (std::size_t i = 0; i < M.dim(); ++i) cover(i, j * d + t) = y[i];
    }
  const auto X = matlis_dual(free_module(R, gens.count));
  Matrix<F> iota = cover.transpose();
  ensure(rank(iota) == M.dim(), "dual of the free cover is not injective");
  for (std::size_t i = 0; i < M.actions().size(); ++i)
    ensure(iota * M.action(i) == X.action(i) * iota, "embedding is not R-linear");
  auto image = Submodule<F>(X, Subspace<F>::span(iota));
  return {X, std::move(iota), std::move(image)};
}

/// I·(M :_X I) pulled back into M. Requires Ext¹(R/I, X) = 0.
template <Field F>
Submodule<F> trace_via_colon(const ModuleRep<F>& M, const InjectiveEmbedding<F>& e,
                             const Ideal<F>& I) {
  if (ext1(I, e.X).dim() != 0) {
    throw Error(ErrorKind::ExtNotVanishing, "Ext¹(R/I, X) does not vanish");
  }
  const auto IC = ideal_times_submodule(I, colon(e.image, I));
  ensure(contains(e.image.carrier(), IC.carrier()), "I·(M :_X I) is not inside M");
  return Submodule<F>(M, preimage(e.inclusion, IC.carrier()));
}

}  // namespace tracelab
