#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "common.hpp"

using namespace tracelab;

namespace {

Error parse_error(std::string_view text) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    return e;
  }
  return Error(ErrorKind::Internal, "no error");
}

}  // namespace

TEST(SpecFile, ParsesAllSections) {
  const auto spec = parse_spec(R"(# comment
[algebra]
name = plane
field = Q, F2
variables = x, y
relations = x^2, x*y, y^2   # trailing comment

[module]
name = m1
generators = 2
row = x, y
row = 0, x

[ideal]
name = i1
generators = x

[semigroup]
generators = 3, 4
max_power = 6

[verify]
seed = 9
random_instances = 5
sections = 1, 3
)");
  ASSERT_EQ(spec.algebras.size(), 1u);
  const auto& a = spec.algebras[0];
  EXPECT_EQ(a.name, "plane");
  EXPECT_EQ(a.fields, (std::vector<std::string>{"Q", "F2"}));
  EXPECT_EQ(a.variables, (std::vector<std::string>{"x", "y"}));
  ASSERT_EQ(a.relations.size(), 3u);
  EXPECT_EQ(a.relations[1].text, "x*y");
  EXPECT_EQ(a.relations[1].line, 6u);
  EXPECT_EQ(a.relations[1].column, 17u);
  ASSERT_EQ(a.modules.size(), 1u);
  EXPECT_EQ(a.modules[0].generators, 2u);
  EXPECT_EQ(a.modules[0].row_texts()[1], (std::vector<std::string>{"0", "x"}));
  EXPECT_EQ(a.ideals[0].texts(), (std::vector<std::string>{"x"}));
  ASSERT_EQ(spec.semigroups.size(), 1u);
  EXPECT_EQ(spec.semigroups[0].generators, (std::vector<long>{3, 4}));
  EXPECT_EQ(*spec.semigroups[0].max_power, 6u);
  EXPECT_EQ(spec.verify.seed, 9u);
  EXPECT_EQ(spec.verify.random_instances, 5u);
  EXPECT_EQ(spec.verify.sections, (std::vector<int>{1, 3}));

  const auto R = build_algebra<Rational>(a.presentation("Q"));
  EXPECT_EQ(R.dim(), 3u);
  const auto M = module_from_presentation<Rational>(R, a.modules[0].row_texts(), 2);
  EXPECT_EQ(M.dim(), 4u);  // R^2 modulo two socle rows
}

TEST(SpecFile, ErrorsHaveLineAndColumn) {
  auto e = parse_error("[algebra]\nname = a\ncolour = red\n");
  EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 1u);

  e = parse_error("[algebra]\nfield = Q, F7\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 12u);

  e = parse_error("[ring]\n");
  EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  EXPECT_EQ(e.line(), 1u);

  e = parse_error("[semigroup]\ngenerators = 3, four\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 17u);

  EXPECT_EQ(parse_error("name = x\n").kind(), ErrorKind::ParseError);
  EXPECT_EQ(parse_error("[verify]\nsections = 4\n").kind(), ErrorKind::ParseError);
  EXPECT_EQ(parse_error("[algebra]\nvariables = x,,y\n").kind(), ErrorKind::ParseError);
}

TEST(SpecFile, RelationErrorsPointIntoTheFile) {
  const auto spec = parse_spec("[algebra]\nvariables = x\nrelations = x^2, x + q\n");
  try {
    build_algebra<Rational>(spec.algebras[0].presentation("Q"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 22u);
  }
}

TEST(SpecFile, ModuleRowsAreChecked) {
  const auto spec = parse_spec(
      "[algebra]\nvariables = x\nrelations = x^2\n[module]\ngenerators = 2\nrow = x\n");
  const auto& a = spec.algebras[0];
  EXPECT_THROW(check_polynomials(a, a.modules, a.ideals), Error);
}

TEST(SpecFile, CatalogParses) {
  std::ifstream in(TRACELAB_CATALOG);
  ASSERT_TRUE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  const auto spec = parse_spec(ss.str());
  EXPECT_EQ(spec.algebras.size(), 7u);
  EXPECT_EQ(spec.semigroups.size(), 7u);
}
