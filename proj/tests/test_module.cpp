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

}  // namespace

TEST(Modules, RegularAndField) {
  EXPECT_EQ(regular_module(dual_numbers<Q>()).dim(), 2u);
  EXPECT_EQ(regular_module(field_ring<Q>()).dim(), 1u);
}

TEST(Modules, Presentations) {
  const auto R = dual_numbers<Q>();
  EXPECT_EQ(module_from_presentation<Q>(R, {{"1"}}, 1).dim(), 0u);
  const auto k = module_from_presentation<Q>(R, {{"x"}}, 1);
  EXPECT_EQ(k.dim(), 1u);
  EXPECT_EQ(k.action(0), Matrix<Q>(1, 1));
  EXPECT_EQ(module_from_presentation<Q>(R, std::vector<std::vector<std::string>>{{}, {}}, 2).dim(), 4u);
}

TEST(Modules, ActionValidation) {
  const auto R = square_zero_plane<Q>();
  // Non-commuting actions are rejected.
  const Matrix<Q> a = Matrix<Q>::from_rows({{0, 1}, {0, 0}});
  const Matrix<Q> b = Matrix<Q>::from_rows({{0, 0}, {1, 0}});
  EXPECT_THROW(ModuleRep<Q>::from_actions(R, {a, b}), Error);
  EXPECT_NO_THROW(ModuleRep<Q>::from_actions(R, {a, Matrix<Q>(2, 2)}));
}

TEST(Modules, SpanSubmodule) {
  const auto R = square_zero_plane<Q>();
  const auto reg = regular_module(R);
  const std::vector<Vector<Q>> none, one{R.unit()}, x{R.element("x")};
  EXPECT_TRUE(span_submodule<Q>(reg, none).is_zero());
  EXPECT_TRUE(span_submodule<Q>(reg, one).carrier().is_full());
  EXPECT_EQ(span_submodule<Q>(reg, x).carrier(), span_of(R, {"x"}));
}

TEST(Modules, IdealTimesModuleAndKill) {
  const auto R = dual_numbers<Q>();
  const auto reg = regular_module(R);
  EXPECT_EQ(ideal_times_module(maximal_ideal(R), reg).carrier(), span_of(R, {"x"}));
  EXPECT_EQ(ideal_times_module(unit_ideal(R), reg).carrier(), Subspace<Q>::full(2));
  EXPECT_TRUE(ideal_times_module(zero_ideal(R), reg).is_zero());
  EXPECT_EQ(kill(reg, ideal_of(R, {"x"})).carrier(), span_of(R, {"x"}));
  EXPECT_TRUE(kill(reg, zero_ideal(R)).carrier().is_full());
  const auto P = square_zero_plane<Q>();
  EXPECT_EQ(kill(regular_module(P), maximal_ideal(P)).carrier(), span_of(P, {"x", "y"}));
}

TEST(Modules, ColonOfWholeIsWhole) {
  const auto R = socle_two<Q>();
  const auto reg = regular_module(R);
  EXPECT_TRUE(colon(whole(reg), maximal_ideal(R)).carrier().is_full());
}

TEST(Modules, IdealsMustBeClosed) {
  const auto R = socle_two<Q>();
  // span{y} is not an ideal: y·y = y² is missing.
  EXPECT_THROW(Ideal<Q>(R, span_of(R, {"y"})), Error);
  EXPECT_EQ(ideal_of(R, {"y"}).dim(), 2u);
}

TEST(Modules, AlgebraMismatch) {
  const auto A = dual_numbers<Q>();
  const auto B = dual_numbers<Q>();
  try {
    ideal_times_module(maximal_ideal(A), regular_module(B));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AlgebraMismatch);
  }
}

TEST(Modules, SocleAnnihilatorLoewy) {
  const auto R = socle_two<Q>();
  const auto reg = regular_module(R);
  EXPECT_EQ(socle(reg).dim(), 2u);  // x and y²
  EXPECT_TRUE(annihilator(reg).is_zero());
  EXPECT_EQ(loewy_length(R), 3u);
  EXPECT_EQ(min_gens(maximal_ideal(R)), 2u);
  EXPECT_EQ(annihilator(residue_field(R)).carrier(), R.maximal_ideal());
  EXPECT_TRUE(radical_part(reg).is_zero());
}

TEST(Enumeration, CyclicIdealCounts) {
  EXPECT_EQ(enumerate_cyclic_ideals(dual_numbers<F2>()).size(), 3u);
  EXPECT_EQ(enumerate_cyclic_ideals(field_ring<F2>()).size(), 2u);
  const auto P = square_zero_plane<F2>();
  EXPECT_EQ(enumerate_cyclic_ideals(P).size(), 5u);
  EXPECT_EQ(enumerate_ideals(P).size(), 6u);
  EXPECT_EQ(enumerate_cyclic_ideals(square_zero_plane<F3>()).size(), 6u);
}

TEST(Enumeration, Errors) {
  try {
    enumerate_cyclic_ideals(dual_numbers<Q>());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldNotFinite);
  }
  try {
    enumerate_cyclic_ideals(complete_intersection<F3>(), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EnumerationCapExceeded);
  }
}

// Oracle: an ideal lattice of a chain ring k[x]/(x^n) is the chain of
// powers of (x).
TEST(Enumeration, ChainRingIdeals) {
  EXPECT_EQ(enumerate_ideals(truncated_cubic<F3>()).size(), 4u);
  EXPECT_EQ(enumerate_ideals(dual_numbers<F5>()).size(), 3u);
}

template <class F>
class ModuleProperties : public ::testing::Test {};
using FiniteFields = ::testing::Types<F2, F3>;
TYPED_TEST_SUITE(ModuleProperties, FiniteFields);

TYPED_TEST(ModuleProperties, EveryIdealIsASumOfCyclicOnes) {
  using F = TypeParam;
  for (const auto& R : catalog<F>()) {
    const auto cyc = enumerate_cyclic_ideals(R);
    for (const auto& I : enumerate_ideals(R)) {
      Subspace<F> s(R.dim());
      for (const auto& c : cyc)
        if (contains(I.carrier(), c.carrier())) s = sum(s, c.carrier());
      EXPECT_EQ(s, I.carrier());
    }
  }
}

TYPED_TEST(ModuleProperties, ColonAndProductAdjunction) {
  using F = TypeParam;
  for (const auto& R : catalog<F>()) {
    const auto ideals = enumerate_ideals(R);
    for (const auto& I : ideals)
      for (const auto& J : ideals) {
        const auto c = ideal_colon(I, J);
        EXPECT_TRUE(contains(I.carrier(), ideal_product(c, J).carrier()));
        for (const auto& K : ideals)
          EXPECT_EQ(contains(I.carrier(), ideal_product(K, J).carrier()),
                    contains(c.carrier(), K.carrier()));
      }
  }
}

TYPED_TEST(ModuleProperties, RandomModulesAreModules) {
  using F = TypeParam;
  Rng rng(31);
  for (const auto& R : catalog<F>()) {
    for (int t = 0; t < 10; ++t) {
      const auto M = random_module(R, rng);
      for (const auto& a : M.actions())
        for (const auto& b : M.actions()) EXPECT_EQ(a * b, b * a);
      EXPECT_LE(M.dim(), 2 * R.dim());
      const auto q = quotient(socle(M));
      EXPECT_EQ(q.module.dim() + socle(M).dim(), M.dim());
      EXPECT_EQ(q.projection * q.section, Matrix<F>::identity(q.module.dim()));
    }
  }
}
