#include <gtest/gtest.h>

#include "common.hpp"

using namespace tracelab;
using namespace testing_support;
using Q = Rational;

namespace {

template <Field F>
Subspace<F> span_of(const ArtinAlgebra<F>& R, std::vector<std::string> elems) {
  std::vector<Vector<F>> v;
  for (const auto& e : elems) v.push_back(R.element(e));
  return Subspace<F>::span(R.dim(), v);
}

/// Every F_2-linear map A → B that commutes with the actions, by listing
/// all dim B × dim A matrices.
std::vector<Matrix<F2>> brute_force_hom(const ModuleRep<F2>& A, const ModuleRep<F2>& B) {
  const std::size_t m = A.dim(), n = B.dim();
  const std::size_t cells = m * n;
  std::vector<Matrix<F2>> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
    Matrix<F2> phi(n, m);
    for (std::size_t c = 0; c < cells; ++c) phi(c / m, c % m) = F2(static_cast<long>((bits >> c) & 1));
    bool ok = true;
    for (std::size_t i = 0; i < A.actions().size() && ok; ++i)
      ok = phi * A.action(i) == B.action(i) * phi;
    if (ok) out.push_back(phi);
  }
  return out;
}

std::size_t log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

}  // namespace

TEST(Trace, Examples) {
  const auto R = square_zero_plane<Q>();
  const auto reg = regular_module(R);
  EXPECT_EQ(gamma(ideal_of(R, {"x"}), reg).carrier(), span_of(R, {"x", "y"}));
  EXPECT_EQ(gamma(ideal_of(R, {"x"}), reg).carrier(), socle(reg).carrier());
  EXPECT_TRUE(gamma(unit_ideal(R), reg).carrier().is_full());
  EXPECT_TRUE(gamma(zero_ideal(R), reg).is_zero());
  // (x) is a copy of k, so it maps onto k.
  EXPECT_EQ(gamma(ideal_of(R, {"x"}), residue_field(R)).dim(), 1u);
  EXPECT_EQ(gamma(ideal_of(R, {"x"}), matlis_dual(reg)).dim(), 1u);
}

TEST(Cotrace, Examples) {
  const auto R = dual_numbers<Q>();
  const auto reg = regular_module(R);
  EXPECT_TRUE(kappa(unit_ideal(R), reg).is_zero());
  EXPECT_TRUE(kappa(zero_ideal(R), reg).carrier().is_full());
  EXPECT_EQ(kappa(ideal_of(R, {"x"}), reg).carrier(), span_of(R, {"x"}));
  EXPECT_EQ(kappa(ideal_of(R, {"x"}), reg), kill(reg, ideal_of(R, {"x"})));
}

TEST(Sigma, Examples) {
  const auto R = square_zero_plane<Q>();
  const auto reg = regular_module(R);
  EXPECT_TRUE(sigma(unit_ideal(R), reg).surjective);
  EXPECT_TRUE(sigma(zero_ideal(R), reg).surjective);
  EXPECT_TRUE(sigma(ideal_of(R, {"x"}), reg).surjective);
  const auto D = dual_numbers<Q>();
  EXPECT_TRUE(sigma(ideal_of(D, {"x"}), regular_module(D)).surjective);
}

TEST(Alpha, UnitIdealIsIdentity) {
  const auto R = socle_two<Q>();
  const auto reg = regular_module(R);
  const auto a = alpha(whole(reg), unit_ideal(R));
  EXPECT_TRUE(a.kernel.is_zero());
  EXPECT_TRUE(a.map.injective);
  EXPECT_TRUE(a.map.surjective);
}

TEST(Beta, Examples) {
  const auto R = square_zero_plane<Q>();
  const auto reg = regular_module(R);
  EXPECT_TRUE(beta(reg, zero_ideal(R)).injective);
  EXPECT_TRUE(beta(reg, unit_ideal(R)).injective);
  EXPECT_TRUE(beta(residue_field(R), ideal_of(R, {"x"})).injective);
}

TEST(Ext1, Examples) {
  const auto D = dual_numbers<Q>();
  EXPECT_EQ(ext1(ideal_of(D, {"x"}), regular_module(D)).dim(), 0u);
  const auto R = square_zero_plane<Q>();
  const auto reg = regular_module(R);
  EXPECT_EQ(ext1(ideal_of(R, {"x"}), reg).dim(), 1u);
  EXPECT_EQ(ext1(unit_ideal(R), reg).dim(), 0u);
  EXPECT_EQ(ext1(ideal_of(R, {"x"}), matlis_dual(residue_field(R))).dim(), 1u);
}

TEST(Tor1, Examples) {
  const auto R = square_zero_plane<Q>();
  EXPECT_EQ(tor1(regular_module(R), ideal_of(R, {"x"})).dim(), 0u);
  EXPECT_EQ(tor1(free_module(R, 2), maximal_ideal(R)).dim(), 0u);
  EXPECT_EQ(tor1(residue_field(R), ideal_of(R, {"x"})).dim(), 1u);
}

TEST(Tensor, Examples) {
  const auto D = dual_numbers<Q>();
  const auto k = residue_field(D);
  EXPECT_EQ(tensor_product(k, k).module.dim(), 1u);
  EXPECT_EQ(tensor_product(regular_module(D), k).module.dim(), 1u);
  EXPECT_EQ(tensor_product(free_module(D, 2), regular_module(D)).module.dim(), 4u);
}

TEST(InjectiveHull, Examples) {
  const auto D = dual_numbers<Q>();
  const auto dual = matlis_dual(regular_module(D));
  EXPECT_EQ(embed_into_injective(dual).X.dim(), 2u);
  const auto e = embed_into_injective(residue_field(D));
  EXPECT_EQ(e.X.dim(), 2u);
  EXPECT_EQ(e.image.carrier(), socle(e.X).carrier());
  EXPECT_EQ(embed_into_injective(regular_module(D)).X.dim(), 2u);
  const auto R = square_zero_plane<Q>();
  EXPECT_EQ(embed_into_injective(regular_module(R)).X.dim(), 6u);
}

TEST(TraceViaColon, Examples) {
  const auto R = square_zero_plane<Q>();
  const auto reg = regular_module(R);
  const auto e = embed_into_injective(reg);
  EXPECT_TRUE(trace_via_colon(reg, e, unit_ideal(R)).carrier().is_full());
  EXPECT_TRUE(trace_via_colon(reg, e, zero_ideal(R)).is_zero());
  EXPECT_EQ(trace_via_colon(reg, e, ideal_of(R, {"x"})).dim(), 2u);
}

TEST(Duality, DualIsAnInvolution) {
  Rng rng(41);
  const auto R = socle_two<Q>();
  for (int t = 0; t < 20; ++t) {
    const auto M = random_module(R, rng);
    EXPECT_EQ(matlis_dual(matlis_dual(M)), M);
  }
}

// Brute-force oracle: over F_2 the solution space of the intertwining
// equations has exactly 2^dim Hom elements, and the trace is spanned by
// the images of all of them.
TEST(Oracle, HomAndTraceOverF2) {
  Rng rng(42);
  for (const auto& R : catalog<F2>()) {
    std::vector<ModuleRep<F2>> modules{regular_module(R), residue_field(R),
                                       matlis_dual(regular_module(R))};
    for (int t = 0; t < 3; ++t) modules.push_back(random_module(R, rng));
    for (const auto& M : modules) {
      if (M.dim() > 4) continue;
      for (const auto& I : enumerate_cyclic_ideals(R)) {
        const auto Imod = ideal_module(I);
        if (Imod.dim() * M.dim() > 16) continue;
        const auto homs = brute_force_hom(Imod, M);
        EXPECT_EQ(log2(homs.size()), hom_module(Imod, M).dim());
        EXPECT_EQ(homs.size(), std::size_t{1} << hom_module(Imod, M).dim());
        Subspace<F2> images(M.dim());
        for (const auto& phi : homs) images = sum(images, column_space(phi));
        EXPECT_EQ(images, gamma(I, M).carrier());
      }
    }
  }
}

template <class F>
class HomologicalProperties : public ::testing::Test {};
using Fields = ::testing::Types<Q, F2, F3>;
TYPED_TEST_SUITE(HomologicalProperties, Fields);

// dim (M ⊗ N)° = dim Hom(M, N°) by adjunction.
TYPED_TEST(HomologicalProperties, TensorHomAdjunction) {
  using F = TypeParam;
  Rng rng(43);
  for (const auto& R : catalog<F>()) {
    for (int t = 0; t < 5; ++t) {
      const auto M = random_module(R, rng);
      const auto N = random_module(R, rng);
      EXPECT_EQ(tensor_product(M, N).module.dim(), hom_module(M, matlis_dual(N)).dim());
    }
  }
}

TYPED_TEST(HomologicalProperties, HomFromRegularIsTheModule) {
  using F = TypeParam;
  Rng rng(44);
  for (const auto& R : catalog<F>()) {
    for (int t = 0; t < 5; ++t) {
      const auto M = random_module(R, rng);
      EXPECT_EQ(hom_module(regular_module(R), M).dim(), M.dim());
      EXPECT_EQ(tensor_product(M, regular_module(R)).module.dim(), M.dim());
    }
  }
}

TYPED_TEST(HomologicalProperties, SandwichesAndTwoRoutes) {
  using F = TypeParam;
  Rng rng(45);
  for (const auto& R : catalog<F>()) {
    for (int t = 0; t < 8; ++t) {
      const auto M = random_module(R, rng);
      const auto I = random_ideal(R, rng);
      const auto g = gamma(I, M);
      const auto k = kappa(I, M);
      EXPECT_TRUE(contains(g.carrier(), ideal_times_module(I, M).carrier()));
      EXPECT_TRUE(contains(kill(M, annihilator(I)).carrier(), g.carrier()));
      EXPECT_TRUE(contains(k.carrier(), ideal_times_module(annihilator(I), M).carrier()));
      EXPECT_TRUE(contains(kill(M, I).carrier(), k.carrier()));
      EXPECT_EQ(g, trace_via_colon(M, embed_into_injective(M), I));
      EXPECT_EQ(ext1(I, matlis_dual(M)).dim(), tor1(M, I).dim());
    }
  }
}

TYPED_TEST(HomologicalProperties, CyclicIdealFormulas) {
  using F = TypeParam;
  Rng rng(46);
  for (const auto& R : catalog<F>()) {
    for (int t = 0; t < 8; ++t) {
      const auto M = random_module(R, rng);
      const auto I = principal_ideal(R, R.element(random_polynomial<F>(R.variables(), rng, 1)));
      const auto ann = annihilator(I);
      EXPECT_EQ(gamma(I, M), kill(M, ann));
      EXPECT_EQ(kappa(I, M), ideal_times_module(ann, M));
      EXPECT_TRUE(sigma(I, M).surjective);
      EXPECT_TRUE(beta(M, I).injective);
      EXPECT_EQ(ext1(I, M).dim(), kill(M, ann).dim() - ideal_times_module(I, M).dim());
      EXPECT_EQ(tor1(M, I).dim(), kill(M, I).dim() - ideal_times_module(ann, M).dim());
    }
  }
}

TEST(Errors, ExtNotVanishingIsReported) {
  // Over a non-QF ring the residue field is not injective, so using it as
  // the ambient module must be refused.
  const auto R = square_zero_plane<Q>();
  const auto k = residue_field(R);
  InjectiveEmbedding<Q> fake{k, Matrix<Q>::identity(1), whole(k)};
  try {
    trace_via_colon(k, fake, ideal_of(R, {"x"}));
    FAIL() << "expected ExtNotVanishing";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ExtNotVanishing);
  }
}
