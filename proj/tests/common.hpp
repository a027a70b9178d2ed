#pragma once

#include <string>
#include <vector>

#include "tracelab/tracelab.hpp"

namespace testing_support {

using namespace tracelab;

template <Field F>
ArtinAlgebra<F> ring(std::vector<std::string> vars, std::vector<std::string> relations) {
  PolynomialPresentation p;
  p.field = F::name();
  p.variables = std::move(vars);
  p.relations = std::move(relations);
  return build_algebra<F>(p);
}

// The catalog rings by name.
template <Field F> ArtinAlgebra<F> field_ring() { return ring<F>({"x"}, {"x"}); }
template <Field F> ArtinAlgebra<F> dual_numbers() { return ring<F>({"x"}, {"x^2"}); }
template <Field F> ArtinAlgebra<F> truncated_cubic() { return ring<F>({"x"}, {"x^3"}); }
template <Field F> ArtinAlgebra<F> square_zero_plane() {
  return ring<F>({"x", "y"}, {"x^2", "x*y", "y^2"});
}
template <Field F> ArtinAlgebra<F> complete_intersection() {
  return ring<F>({"x", "y"}, {"x^2", "y^2"});
}
template <Field F> ArtinAlgebra<F> socle_two() { return ring<F>({"x", "y"}, {"x^2", "x*y", "y^3"}); }

template <Field F>
std::vector<ArtinAlgebra<F>> catalog() {
  return {field_ring<F>(),    dual_numbers<F>(),          truncated_cubic<F>(),
          square_zero_plane<F>(), complete_intersection<F>(), socle_two<F>()};
}

template <Field F>
Ideal<F> ideal_of(const ArtinAlgebra<F>& R, std::vector<std::string> gens) {
  return ideal_from_polynomials<F>(R, gens);
}

template <Field F>
ModuleRep<F> residue_field(const ArtinAlgebra<F>& R) {
  return quotient(as_submodule(maximal_ideal(R), regular_module(R))).module;
}

/// Random matrix with entries in −2..2 (reduced mod p over F_p).
template <Field F>
Matrix<F> random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix<F> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = F(rng.between(-2, 2));
  return m;
}

/// Sparse-ish random matrix, so that rank deficiency is common.
template <Field F>
Matrix<F> random_low_rank(Rng& rng, std::size_t rows, std::size_t cols) {
  const std::size_t r = rng.below(std::min(rows, cols) + 1);
  return random_matrix<F>(rng, rows, r) * random_matrix<F>(rng, r, cols);
}

}  // namespace testing_support
