#include <gtest/gtest.h>

#include <set>

#include "common.hpp"
#include "semigroup_oracle.hpp"

using namespace tracelab;
using testing_support::Window;

namespace {

std::vector<std::vector<long>> catalog_gens() {
  return {{1}, {2, 3}, {2, 5}, {3, 4}, {3, 5, 7}, {4, 5, 6, 7}, {5, 6, 9}};
}

}  // namespace

TEST(Semigroup, Basics) {
  const auto S = NumericalSemigroup::make({3, 4});
  EXPECT_EQ(S.gaps(), (std::vector<long>{1, 2, 5}));
  EXPECT_EQ(S.conductor(), 6);
  EXPECT_EQ(S.frobenius(), 5);
  EXPECT_EQ(S.multiplicity(), 3);
  const auto N = NumericalSemigroup::make({1});
  EXPECT_EQ(N.conductor(), 0);
  EXPECT_EQ(N.multiplicity(), 1);
  EXPECT_EQ(NumericalSemigroup::make({3, 4, 6, 7}).minimal_generators(), (std::vector<long>{3, 4}));
  EXPECT_EQ(NumericalSemigroup::make({1, 10}).minimal_generators(), (std::vector<long>{1}));
}

TEST(Semigroup, Errors) {
  auto kind = [](std::vector<long> g) {
    try {
      NumericalSemigroup::make(std::move(g));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  EXPECT_EQ(kind({2, 4}), ErrorKind::NotCoFinite);
  EXPECT_EQ(kind({}), ErrorKind::EmptyGenerators);
  EXPECT_EQ(kind({0, 3}), ErrorKind::InvalidArgument);
  const auto S = NumericalSemigroup::make({3, 4});
  try {
    ext1_dim(maximal_ideal(S).shifted(-1), S);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IdealNotIntegral);
  }
}

TEST(Semigroup, PinnedValues) {
  const auto S = NumericalSemigroup::make({3, 4});
  EXPECT_EQ(nu_index(S), 2u);
  EXPECT_EQ(lambda_inverse(S).to_string(), "{n >= 6}");
  EXPECT_EQ(lambda_inverse(S), power_m(S, 2));
  EXPECT_EQ(trace_value(power_m(S, 2), S).to_string(), "{n >= 6}");
  EXPECT_EQ(inverse(maximal_ideal(S), S).to_string(), "{0, n >= 3}");
  EXPECT_EQ(ext1_dim(maximal_ideal(S), S), 1u);

  const auto T = NumericalSemigroup::make({3, 5, 7});
  EXPECT_EQ(nu_index(T), 1u);
  EXPECT_EQ(lambda_inverse(T), maximal_ideal(T));
  EXPECT_EQ(lambda(T).to_string(), "{0, n >= 2}");

  const auto U = NumericalSemigroup::make({2, 3});
  EXPECT_EQ(nu_index(U), 1u);
  EXPECT_EQ(lambda_inverse(U), maximal_ideal(U));

  const auto N = NumericalSemigroup::make({1});
  EXPECT_EQ(nu_index(N), 1u);
  EXPECT_FALSE(is_good(maximal_ideal(N), N));
  EXPECT_EQ(inverse(maximal_ideal(N), N).to_string(), "{n >= -1}");
  EXPECT_EQ(ext1_dim(maximal_ideal(N), N), 1u);
  EXPECT_EQ(ext1_dim(whole_semigroup(N), N), 0u);
}

TEST(Semigroup, ValueSetsAreNormalised) {
  const auto v = ValueSet::from_predicate(0, 10, [](long z) { return z == 0 || z >= 3; });
  EXPECT_EQ(v.conductor(), 3);
  EXPECT_EQ(v.below_conductor(), (std::vector<long>{0}));
  EXPECT_EQ(v.to_string(), "{0, n >= 3}");
  EXPECT_EQ(v.shifted(2).to_string(), "{2, n >= 5}");
}

TEST(Semigroup, PrincipalIdealsHaveWholeTrace) {
  for (const auto& g : catalog_gens()) {
    const auto S = NumericalSemigroup::make(g);
    const auto whole = whole_semigroup(S);
    for (long s : S.small_elements()) {
      const auto E = ideal({s}, S);
      EXPECT_EQ(trace_value(E, S), whole);
      EXPECT_EQ(is_good(E, S), s == 0);
    }
  }
}

TEST(Semigroup, MaximalIdealGoodIffNotDvr) {
  for (const auto& g : catalog_gens()) {
    const auto S = NumericalSemigroup::make(g);
    EXPECT_EQ(is_good(maximal_ideal(S), S), !is_dvr(S)) << "generators " << g.front();
    EXPECT_TRUE(good_prime_check(S));
  }
}

TEST(Semigroup, ReportVerdicts) {
  for (const auto& g : catalog_gens()) {
    const auto S = NumericalSemigroup::make(g);
    const auto r = matlis_report(S);
    EXPECT_TRUE(r.stable_trace_verdict);
    EXPECT_EQ(r.table.size(), r.nu + 4);
    if (r.v_m == 2) {
      ASSERT_TRUE(r.two_generator_verdict.has_value());
      EXPECT_TRUE(*r.two_generator_verdict);
    } else {
      EXPECT_FALSE(r.two_generator_verdict.has_value());
    }
  }
  EXPECT_THROW(matlis_report(NumericalSemigroup::make({3, 4}), 3u), Error);
}

// Oracle cross-check: powers of m, their inverses and traces from literal
// set operations.
TEST(Oracle, PowersInversesAndTraces) {
  for (const auto& g : catalog_gens()) {
    const auto S = NumericalSemigroup::make(g);
    const auto s = Window::semigroup(g);
    const auto m = s.without_zero();
    EXPECT_TRUE(s.matches(whole_semigroup(S)));
    EXPECT_TRUE(m.matches(maximal_ideal(S)));
    Window p = m;
    for (unsigned n = 1; n <= nu_index(S) + 4; ++n) {
      if (n > 1) p = p.plus(m);
      const auto P = power_m(S, n);
      EXPECT_TRUE(p.matches(P)) << "power " << n;
      const auto inv = s.colon(p);
      EXPECT_TRUE(inv.matches(inverse(P, S))) << "inverse " << n;
      EXPECT_TRUE(p.plus(inv).matches(trace_value(P, S))) << "trace " << n;
      if (n >= nu_index(S)) EXPECT_TRUE(p.plus(inv).matches(lambda_inverse(S)));
    }
  }
}

template <class Op>
void for_random_ideals(Op&& op) {
  Rng rng(51);
  for (const auto& g : catalog_gens()) {
    const auto S = NumericalSemigroup::make(g);
    for (int t = 0; t < 25; ++t) {
      std::vector<long> gens;
      const std::size_t k = 1 + rng.below(3);
      while (gens.size() < k) {
        const long z = rng.between(0, S.conductor() + S.multiplicity() + 3);
        if (S.contains(z)) gens.push_back(z);
      }
      op(S, gens, ideal(gens, S), rng);
    }
  }
}

TEST(SemigroupProperties, TraceIsShiftInvariantAndGood) {
  for_random_ideals([](const NumericalSemigroup& S, const std::vector<long>&, const ValueSet& E,
                       Rng& rng) {
    const long z = rng.between(-6, 6);
    EXPECT_EQ(trace_value(E.shifted(z), S), trace_value(E, S));
    EXPECT_TRUE(is_good(trace_value(E, S), S));
  });
}

TEST(Oracle, SumsetsAndColonsOfRandomIdeals) {
  for_random_ideals([](const NumericalSemigroup& S, const std::vector<long>& gens,
                       const ValueSet& E, Rng&) {
    const auto s = Window::semigroup(S.generators());
    const auto m = s.without_zero();
    const auto e = Window::ideal(s, gens);
    EXPECT_TRUE(e.matches(E));
    EXPECT_TRUE(e.plus(m).matches(sumset(E, maximal_ideal(S))));
    EXPECT_TRUE(e.colon(m).matches(colon(E, maximal_ideal(S))));
    EXPECT_TRUE(s.colon(e).matches(inverse(E, S)));
    EXPECT_TRUE(e.plus(s.colon(e)).matches(trace_value(E, S)));
    EXPECT_TRUE(e.colon(e).matches(colon(E, E)));
  });
}

TEST(SemigroupProperties, ColonContainmentAndAbsorption) {
  for_random_ideals([](const NumericalSemigroup& S, const std::vector<long>&, const ValueSet& E,
                       Rng&) {
    const auto m = maximal_ideal(S);
    EXPECT_EQ(set_union(sumset(colon(E, m), m), E), E);
    EXPECT_EQ(sumset(E, whole_semigroup(S)), E);
    EXPECT_EQ(is_good(E, S), self_colon_eq_inverse(E, S));
  });
}

TEST(SemigroupProperties, GoodIdealsAreClosedUnderIntegralColonAndUnion) {
  Rng rng(52);
  for (const auto& g : catalog_gens()) {
    const auto S = NumericalSemigroup::make(g);
    std::vector<ValueSet> ideals{whole_semigroup(S), lambda_inverse(S)};
    for (unsigned n = 1; n <= 4; ++n) ideals.push_back(power_m(S, n));
    for (int t = 0; t < 10; ++t) {
      const long z = rng.between(1, S.conductor() + 4);
      if (S.contains(z)) ideals.push_back(ideal({z, z + 1}, S));
    }
    for (const auto& E : ideals) {
      if (!is_good(E, S)) continue;
      for (const auto& F : ideals) {
        EXPECT_TRUE(is_good(colon_in(E, F, S), S));
        if (is_good(F, S)) EXPECT_TRUE(is_good(set_union(E, F), S));
      }
    }
  }
}

TEST(SemigroupProperties, Ext1VanishesOnlyForTheUnitIdeal) {
  for_random_ideals([](const NumericalSemigroup& S, const std::vector<long>&, const ValueSet& E,
                       Rng&) {
    EXPECT_EQ(ext1_dim(E, S) == 0, E == whole_semigroup(S));
  });
}
