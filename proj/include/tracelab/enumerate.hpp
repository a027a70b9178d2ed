#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "tracelab/error.hpp"
#include "tracelab/module.hpp"

namespace tracelab {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

namespace detail {

template <Field F>
std::size_t checked_power(std::size_t dim, std::size_t cap) {
  if constexpr (!F::is_finite) {
    throw Error(ErrorKind::FieldNotFinite, "exhaustive enumeration needs a finite field");
  } else {
    std::size_t count = 1;
    for (std::size_t j = 0; j < dim; ++j) {
      count *= F::characteristic;
      if (count > cap) {
        throw Error(ErrorKind::EnumerationCapExceeded,
                    "p^dim exceeds the enumeration cap " + std::to_string(cap));
      }
    }
    return count;
  }
}

template <Field F>
std::vector<Subspace<F>> sorted(const std::set<Subspace<F>>& s) {
  return {s.begin(), s.end()};
}

}  // namespace detail

/// Distinct submodules R·x over all x ∈ M, ordered by dimension.
template <Field F>
std::vector<Submodule<F>> enumerate_cyclic_submodules(const ModuleRep<F>& M,
                                                      std::size_t cap = kDefaultEnumerationCap) {
  detail::checked_power<F>(M.dim(), cap);
  std::set<Subspace<F>> seen;
  if constexpr (F::is_finite) {
    for (const auto& x : elements(Subspace<F>::full(M.dim()), cap))
      seen.insert(span_submodule<F>(M, std::span<const Vector<F>>(&x, 1)).carrier());
  }
  std::vector<Submodule<F>> out;
  for (auto& s : seen) out.emplace_back(M, s);
  return out;
}

template <Field F>
std::vector<Ideal<F>> enumerate_cyclic_ideals(const ArtinAlgebra<F>& R,
                                              std::size_t cap = kDefaultEnumerationCap) {
  std::vector<Ideal<F>> out;
  for (const auto& s : enumerate_cyclic_submodules(regular_module(R), cap))
    out.emplace_back(R, s.carrier());
  return out;
}

/// Every submodule of M, built as sums of cyclic submodules. `cap` bounds
/// both the element count p^dim and the number of submodules produced.
template <Field F>
std::vector<Submodule<F>> enumerate_submodules(const ModuleRep<F>& M,
                                               std::size_t cap = kDefaultEnumerationCap) {
  const auto cyclic = enumerate_cyclic_submodules(M, cap);
  std::set<Subspace<F>> seen;
  std::vector<Subspace<F>> frontier{Subspace<F>(M.dim())};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Subspace<F>> next;
    for (const auto& u : frontier) {
      for (const auto& c : cyclic) {
        if (contains(u, c.carrier())) continue;
        auto s = sum(u, c.carrier());
        if (seen.insert(s).second) {
          if (seen.size() > cap)
            throw Error(ErrorKind::EnumerationCapExceeded, "too many submodules");
          next.push_back(std::move(s));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Submodule<F>> out;
  for (auto& s : seen) out.emplace_back(M, s);
  return out;
}

template <Field F>
std::vector<Ideal<F>> enumerate_ideals(const ArtinAlgebra<F>& R,
                                       std::size_t cap = kDefaultEnumerationCap) {
  std::vector<Ideal<F>> out;
  for (const auto& s : enumerate_submodules(regular_module(R), cap))
    out.emplace_back(R, s.carrier());
  return out;
}

}  // namespace tracelab
