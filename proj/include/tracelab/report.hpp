#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "tracelab/algebra.hpp"
#include "tracelab/module.hpp"
#include "tracelab/semigroup.hpp"

namespace tracelab {

using Json = nlohmann::json;

inline constexpr std::string_view kVersion = "0.1.0";

/// Rationals become "p/q" strings, F_p residues plain integers.
template <Field F>
Json to_json(const F& x) {
  if constexpr (F::is_finite) {
    return std::stoi(x.to_string());
  } else {
    return x.to_string();
  }
}

template <Field F>
Json to_json(const Matrix<F>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Field F>
Json vector_json(std::span<const F> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

/// Canonical basis vectors, one array per basis element.
template <Field F>
Json to_json(const Subspace<F>& s) {
  Json basis = Json::array();
  for (std::size_t j = 0; j < s.dim(); ++j) basis.push_back(vector_json<F>(s.vector(j)));
  return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", std::move(basis)}};
}

/// r ∈ R written in the monomial basis, e.g. "x + 2*y".
template <Field F>
std::string element_to_string(const ArtinAlgebra<F>& R, std::span<const F> v) {
  std::string out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    std::string c = v[j].to_string();
    const bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    const std::string label = R.basis_label(j);
    if (label == "1") {
      out += c;
    } else if (c == "1") {
      out += label;
    } else {
      out += c + "*" + label;
    }
  }
  return out.empty() ? "0" : out;
}

template <Field F>
Json algebra_json(const ArtinAlgebra<F>& R) {
  Json basis = Json::array();
  for (std::size_t j = 0; j < R.dim(); ++j) basis.push_back(R.basis_label(j));
  Json gens = Json::array();
  for (const auto& g : R.generators()) gens.push_back(to_json(g));
  return {{"field", F::name()},
          {"variables", R.variables()},
          {"relations", R.presentation().relations},
          {"dim", R.dim()},
          {"basis", std::move(basis)},
          {"generator_actions", std::move(gens)}};
}

template <Field F>
Json module_json(const ModuleRep<F>& M) {
  Json actions = Json::array();
  for (const auto& a : M.actions()) actions.push_back(to_json(a));
  return {{"dim", M.dim()}, {"actions", std::move(actions)}};
}

template <Field F>
Json ideal_json(const Ideal<F>& I) {
  Json elems = Json::array();
  for (std::size_t j = 0; j < I.dim(); ++j)
    elems.push_back(element_to_string<F>(I.algebra(), I.element(j)));
  return {{"dim", I.dim()}, {"basis", std::move(elems)}, {"carrier", to_json(I.carrier())}};
}

inline Json to_json(const ValueSet& v) {
  return {{"below_conductor", v.below_conductor()}, {"conductor", v.conductor()}};
}

inline std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// Keys are sorted (nlohmann's default object is an ordered map), so the
/// output is byte-stable.
inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tracelab
