#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tracelab/enumerate.hpp"
#include "tracelab/trace.hpp"

namespace tracelab {

/// How much of the ideal lattice a predicate was checked against.
enum class Evidence { Exhaustive, Sampled, Formula };

constexpr std::string_view to_string(Evidence e) {
  switch (e) {
    case Evidence::Exhaustive: return "exhaustive";
    case Evidence::Sampled: return "sampled";
    case Evidence::Formula: return "formula";
  }
  return "?";
}

/// IM = γ_I(M)
template <Field F>
bool is_I_excellent(const Ideal<F>& I, const ModuleRep<F>& M) {
  return gamma(I, M) == ideal_times_module(I, M);
}

/// κ_I(M) = M[I]
template <Field F>
bool is_I_coexcellent(const Ideal<F>& I, const ModuleRep<F>& M) {
  return kappa(I, M) == kill(M, I);
}

template <Field F>
struct PredicateResult {
  bool value = true;
  Evidence evidence = Evidence::Sampled;
  std::size_t ideals_checked = 0;
  std::optional<Ideal<F>> witness;  ///< first ideal where the property fails
};

/// The ideals a "for all I" predicate is tested on: every cyclic ideal over
/// F_p, otherwise `sample`. Sums of good test ideals stay good, so cyclic
/// ideals suffice.
template <Field F>
std::vector<Ideal<F>> test_ideals(const ArtinAlgebra<F>& R, const std::vector<Ideal<F>>& sample,
                                  Evidence& evidence, std::size_t cap = kDefaultEnumerationCap) {
  if constexpr (F::is_finite) {
    evidence = Evidence::Exhaustive;
    return enumerate_cyclic_ideals(R, cap);
  } else {
    evidence = Evidence::Sampled;
    return sample;
  }
}

namespace detail {

template <Field F, class Pred>
PredicateResult<F> for_all_ideals(const ArtinAlgebra<F>& R, const std::vector<Ideal<F>>& sample,
                                  std::size_t cap, Pred&& pred) {
  PredicateResult<F> out;
  for (const auto& I : test_ideals(R, sample, out.evidence, cap)) {
    ++out.ideals_checked;
    if (!pred(I)) {
      out.value = false;
      out.witness = I;
      break;
    }
  }
  return out;
}

}  // namespace detail

template <Field F>
PredicateResult<F> is_excellent(const ModuleRep<F>& M, const std::vector<Ideal<F>>& sample = {},
                                std::size_t cap = kDefaultEnumerationCap) {
  return detail::for_all_ideals(M.algebra(), sample, cap,
                                [&](const Ideal<F>& I) { return is_I_excellent(I, M); });
}

template <Field F>
PredicateResult<F> is_coexcellent(const ModuleRep<F>& M, const std::vector<Ideal<F>>& sample = {},
                                  std::size_t cap = kDefaultEnumerationCap) {
  return detail::for_all_ideals(M.algebra(), sample, cap,
                                [&](const Ideal<F>& I) { return is_I_coexcellent(I, M); });
}

/// I = γ_I(R)
template <Field F>
bool is_good(const Ideal<F>& I) {
  return gamma(I, regular_module(I.algebra())).carrier() == I.carrier();
}

/// Simple socle.
template <Field F>
bool is_qf(const ArtinAlgebra<F>& R) {
  return socle(regular_module(R)).dim() == 1;
}

/// End_R(I) is commutative.
template <Field F>
bool end_commutative(const Ideal<F>& I) {
  const auto m = ideal_module(I);
  const HomModule<F> H(m, m);
  const auto& b = H.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!(b[i] * b[j] == b[j] * b[i])) return false;
  return true;
}

/// An R-isomorphism A → B found by listing Hom(A, B), or nullopt.
template <FiniteField F>
std::optional<Matrix<F>> find_isomorphism(const ModuleRep<F>& A, const ModuleRep<F>& B,
                                          std::size_t cap = kDefaultEnumerationCap) {
  if (A.dim() != B.dim()) return std::nullopt;
  const HomModule<F> H(A, B);
  for (const auto& v : elements(H.solutions(), cap)) {
    Matrix<F> phi = H.unvec(v);
    if (rank(phi) == A.dim()) return phi;
  }
  return std::nullopt;
}

}  // namespace tracelab
