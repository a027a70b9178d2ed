#include <gtest/gtest.h>

#include "common.hpp"

using namespace tracelab;

namespace {

InstanceSpec small_spec(const std::string& algebra, const std::string& fields) {
  return parse_spec("[algebra]\nname = a\nfield = " + fields + "\n" + algebra +
                    "\n[verify]\nrandom_instances = 10\nrandom_modules = 2\n");
}

const char* kDualNumbers = "variables = x\nrelations = x^2";
const char* kPlane = "variables = x, y\nrelations = x^2, x*y, y^2";

}  // namespace

TEST(Verifier, DualNumbersPass) {
  const auto spec = small_spec(kDualNumbers, "F2");
  for (const auto& r : run_verification(spec)) {
    EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
    EXPECT_GT(r.checks_run, 0u);
  }
}

TEST(Verifier, NonQfPlanePasses) {
  const auto spec = small_spec(kPlane, "F2, Q");
  for (const auto& r : run_verification(spec)) EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
}

TEST(Verifier, SemigroupsPass) {
  const auto spec = parse_spec(
      "[semigroup]\ngenerators = 1\n[semigroup]\ngenerators = 2, 3\n[semigroup]\ngenerators = 3, "
      "4\n[semigroup]\ngenerators = 3, 5, 7\n[semigroup]\ngenerators = 4, 5, 6, 7\n");
  const auto r = suite_section2(spec);
  EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
  EXPECT_EQ(r.tallies.at("stable_power_trace_is_lambda_inverse").runs, 5u);
}

TEST(Verifier, InjectedDefectIsCaughtWithCounterexample) {
  const auto spec = small_spec(kPlane, "F2");
  const auto r = suite_section1(spec, Defect::DropHomBasisVector);
  EXPECT_FALSE(r.passed());
  ASSERT_FALSE(r.failures.empty());
  const auto j = r.to_json();
  const auto& f = j["failures"][0];
  EXPECT_TRUE(f["instance"].contains("algebra"));
  EXPECT_TRUE(f["instance"].contains("ideal"));
  EXPECT_TRUE(f["instance"].contains("module"));
  EXPECT_TRUE(f["instance"]["module"].contains("actions"));
}

TEST(Verifier, ReportsAreDeterministic) {
  const auto spec = small_spec(kPlane, "Q");
  Json a = Json::array(), b = Json::array();
  for (const auto& r : run_verification(spec)) a.push_back(r.to_json());
  for (const auto& r : run_verification(spec)) b.push_back(r.to_json());
  EXPECT_EQ(canonical_dump(a), canonical_dump(b));
  EXPECT_EQ(canonical_dump(a).find("elapsed"), std::string::npos);
}

TEST(Verifier, SeedChangesTheSample) {
  auto spec = small_spec(kPlane, "Q");
  spec.verify.sections = {1};
  const auto a = suite_section1(spec);
  spec.verify.seed = 2;
  const auto b = suite_section1(spec);
  EXPECT_TRUE(a.passed() && b.passed());
  // Same number of pairs, different random modules.
  EXPECT_EQ(a.tallies.at("trace_contains_IM").runs, b.tallies.at("trace_contains_IM").runs);
}

TEST(Verifier, SectionSelection) {
  auto spec = small_spec(kDualNumbers, "F3");
  spec.verify.sections = {3};
  const auto r = run_verification(spec);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].suite, "section3");
}
