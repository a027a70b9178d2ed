#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tracelab/algebra.hpp"
#include "tracelab/error.hpp"
#include "tracelab/polynomial.hpp"

namespace tracelab {

/// A list item with its source position (1-based line, 0-based column).
struct Located {
  std::string text;
  std::size_t line = 1;
  std::size_t column = 0;
};

struct ModuleEntry {
  std::string name;
  std::size_t generators = 1;
  std::vector<std::vector<Located>> rows;
  std::size_t line = 0;

  std::vector<std::vector<std::string>> row_texts() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& r : rows) {
      std::vector<std::string> t;
      for (const auto& e : r) t.push_back(e.text);
      out.push_back(std::move(t));
    }
    return out;
  }
};

struct IdealEntry {
  std::string name;
  std::vector<Located> generators;
  std::size_t line = 0;

  std::vector<std::string> texts() const {
    std::vector<std::string> out;
    for (const auto& g : generators) out.push_back(g.text);
    return out;
  }
};

struct AlgebraEntry {
  std::string name;
  std::vector<std::string> fields{"Q"};
  std::vector<std::string> variables;
  std::vector<Located> relations;
  unsigned degree_cap = 24;
  std::size_t dimension_cap = 512;
  std::vector<ModuleEntry> modules;
  std::vector<IdealEntry> ideals;
  std::size_t line = 0;

  PolynomialPresentation presentation(const std::string& field) const {
    PolynomialPresentation p;
    p.field = field;
    p.variables = variables;
    for (const auto& r : relations) {
      p.relations.push_back(r.text);
      p.relation_lines.push_back(r.line);
      p.relation_columns.push_back(r.column);
    }
    p.degree_cap = degree_cap;
    p.dimension_cap = dimension_cap;
    return p;
  }
};

struct SemigroupEntry {
  std::vector<long> generators;
  std::optional<unsigned> max_power;
  std::size_t line = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Random (I, M) pairs per algebra over Q.
  std::size_t random_instances = 100;
  /// Random modules per algebra over F_p, paired with every cyclic ideal.
  std::size_t random_modules = 3;
  /// Pairs on which γ is recomputed through an injective hull.
  std::size_t two_route_instances = 50;
  /// Largest dim R for which all ideals (not only cyclic ones) are listed.
  std::size_t exhaustive_max_dim = 5;
  std::size_t cap_enum = 1'000'000;
  std::vector<int> sections{1, 2, 3};
};

/// Parsed contents of a ring / module / spec file.
struct InstanceSpec {
  std::vector<AlgebraEntry> algebras;
  std::vector<SemigroupEntry> semigroups;
  /// [module] and [ideal] sections that appear before any [algebra].
  std::vector<ModuleEntry> modules;
  std::vector<IdealEntry> ideals;
  VerifyOptions verify;
};

namespace detail {

inline std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t a = 0;
  while (a < s.size() && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
  std::size_t b = s.size();
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
  if (offset) *offset += a;
  return s.substr(a, b - a);
}

[[noreturn]] inline void parse_fail(const std::string& what, std::size_t line, std::size_t column) {
  throw Error(ErrorKind::ParseError,
              what + " at line " + std::to_string(line) + ", column " + std::to_string(column + 1),
              line, column + 1);
}

/// Comma-separated items of `value`, which starts at `column` of `line`.
inline std::vector<Located> split_list(std::string_view value, std::size_t line,
                                       std::size_t column) {
  std::vector<Located> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = value.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? value.size() : comma;
    std::size_t col = column + start;
    const auto item = trim(value.substr(start, end - start), &col);
    if (item.empty()) parse_fail("empty list item", line, col);
    out.push_back({std::string(item), line, col});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class T>
T parse_number(const Located& item) {
  T v{};
  const auto* first = item.text.data();
  const auto* last = first + item.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    parse_fail("expected an integer, got '" + item.text + "'", item.line, item.column);
  }
  return v;
}

}  // namespace detail

/// "3, 4" → {3, 4}
inline std::vector<long> parse_integer_list(std::string_view text, std::size_t line = 1) {
  std::vector<long> out;
  for (const auto& item : detail::split_list(text, line, 0))
    out.push_back(detail::parse_number<long>(item));
  return out;
}

/// Reads the flat `[section]` / `key = value` format; '#' starts a comment.
inline InstanceSpec parse_spec(std::string_view text) {
  InstanceSpec spec;
  enum class Section { None, Algebra, Module, Ideal, Semigroup, Verify } section = Section::None;
  ModuleEntry* module = nullptr;
  IdealEntry* ideal = nullptr;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t col = 0;
    const auto line = detail::trim(raw, &col);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') detail::parse_fail("unterminated section header", line_no, col);
      const auto name = detail::trim(line.substr(1, line.size() - 2));
      if (name == "algebra") {
        section = Section::Algebra;
        spec.algebras.emplace_back();
        spec.algebras.back().line = line_no;
      } else if (name == "module") {
        section = Section::Module;
        auto& list = spec.algebras.empty() ? spec.modules : spec.algebras.back().modules;
        list.emplace_back();
        module = &list.back();
        module->line = line_no;
      } else if (name == "ideal") {
        section = Section::Ideal;
        auto& list = spec.algebras.empty() ? spec.ideals : spec.algebras.back().ideals;
        list.emplace_back();
        ideal = &list.back();
        ideal->line = line_no;
      } else if (name == "semigroup") {
        section = Section::Semigroup;
        spec.semigroups.emplace_back();
        spec.semigroups.back().line = line_no;
      } else if (name == "verify") {
        section = Section::Verify;
      } else {
        detail::parse_fail("unknown section [" + std::string(name) + "]", line_no, col);
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) detail::parse_fail("expected 'key = value'", line_no, col);
    const auto key = detail::trim(line.substr(0, eq));
    std::size_t vcol = col + eq + 1;
    const auto value = detail::trim(line.substr(eq + 1), &vcol);
    if (value.empty()) detail::parse_fail("missing value for '" + std::string(key) + "'", line_no, vcol);
    const auto items = [&] { return detail::split_list(value, line_no, vcol); };
    const auto single = [&] { return Located{std::string(value), line_no, vcol}; };
    const auto unknown = [&] {
      detail::parse_fail("unknown key '" + std::string(key) + "'", line_no, col);
    };

    switch (section) {
      case Section::None:
        detail::parse_fail("key outside of any section", line_no, col);
      case Section::Algebra: {
        auto& a = spec.algebras.back();
        if (key == "name") {
          a.name = std::string(value);
        } else if (key == "field") {
          a.fields.clear();
          for (auto& f : items()) {
            if (f.text != "Q" && f.text != "F2" && f.text != "F3" && f.text != "F5")
              detail::parse_fail("unknown field '" + f.text + "'", f.line, f.column);
            a.fields.push_back(f.text);
          }
        } else if (key == "variables") {
          for (auto& v : items()) a.variables.push_back(v.text);
        } else if (key == "relations") {
          for (auto& r : items()) a.relations.push_back(std::move(r));
        } else if (key == "degree_cap") {
          a.degree_cap = detail::parse_number<unsigned>(single());
        } else if (key == "dimension_cap") {
          a.dimension_cap = detail::parse_number<std::size_t>(single());
        } else {
          unknown();
        }
        break;
      }
      case Section::Module:
        if (key == "name") {
          module->name = std::string(value);
        } else if (key == "generators") {
          module->generators = detail::parse_number<std::size_t>(single());
        } else if (key == "row") {
          module->rows.push_back(items());
        } else {
          unknown();
        }
        break;
      case Section::Ideal:
        if (key == "name") {
          ideal->name = std::string(value);
        } else if (key == "generators") {
          for (auto& g : items()) ideal->generators.push_back(std::move(g));
        } else {
          unknown();
        }
        break;
      case Section::Semigroup: {
        auto& s = spec.semigroups.back();
        if (key == "generators") {
          for (auto& g : items()) s.generators.push_back(detail::parse_number<long>(g));
        } else if (key == "max_power") {
          s.max_power = detail::parse_number<unsigned>(single());
        } else {
          unknown();
        }
        break;
      }
      case Section::Verify: {
        auto& v = spec.verify;
        if (key == "seed") {
          v.seed = detail::parse_number<std::uint64_t>(single());
        } else if (key == "random_instances") {
          v.random_instances = detail::parse_number<std::size_t>(single());
        } else if (key == "random_modules") {
          v.random_modules = detail::parse_number<std::size_t>(single());
        } else if (key == "two_route_instances") {
          v.two_route_instances = detail::parse_number<std::size_t>(single());
        } else if (key == "exhaustive_max_dim") {
          v.exhaustive_max_dim = detail::parse_number<std::size_t>(single());
        } else if (key == "cap_enum") {
          v.cap_enum = detail::parse_number<std::size_t>(single());
        } else if (key == "sections") {
          v.sections.clear();
          for (auto& s : items()) {
            const int n = detail::parse_number<int>(s);
            if (n < 1 || n > 3) detail::parse_fail("sections are 1, 2 and 3", s.line, s.column);
            v.sections.push_back(n);
          }
        } else {
          unknown();
        }
        break;
      }
    }
  }
  return spec;
}

/// Parses every module entry and ideal generator against `variables` so that
/// syntax errors carry file positions.
inline void check_polynomials(const AlgebraEntry& a, const std::vector<ModuleEntry>& modules,
                              const std::vector<IdealEntry>& ideals) {
  for (const auto& m : modules) {
    if (!m.rows.empty() && m.rows.size() != m.generators) {
      detail::parse_fail("module '" + m.name + "' declares " + std::to_string(m.generators) +
                             " generators but has " + std::to_string(m.rows.size()) + " rows",
                         m.line, 0);
    }
    for (const auto& row : m.rows) {
      if (row.size() != m.rows.front().size())
        detail::parse_fail("rows of a presentation must have equal length", row.front().line, 0);
      for (const auto& e : row) parse_polynomial(e.text, a.variables, e.line, e.column);
    }
  }
  for (const auto& i : ideals)
    for (const auto& g : i.generators) parse_polynomial(g.text, a.variables, g.line, g.column);
}

}  // namespace tracelab
