#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tracelab/module.hpp"

namespace tracelab {

/// Seeded generator; `below(n)` is engine() % n so streams are identical on
/// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }
  bool chance(std::size_t one_in) { return below(one_in) == 0; }

 private:
  std::mt19937_64 engine_;
};

/// Derives an independent stream for item `index` of a run seeded by `seed`.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// A polynomial of degree ≤ 2 as text. Coefficients are drawn from −2..2
/// over Q and from all residues over F_p. The constant term is nonzero only
/// with probability 1/`unit_odds` so that random presentations rarely
/// collapse to zero.
template <Field F>
std::string random_polynomial(const std::vector<std::string>& vars, Rng& rng, unsigned min_degree,
                              std::size_t unit_odds = 4) {
  std::vector<std::string> monos;
  if (min_degree == 0) monos.push_back("");
  for (std::size_t i = 0; i < vars.size(); ++i) monos.push_back(vars[i]);
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i; j < vars.size(); ++j) monos.push_back(vars[i] + "*" + vars[j]);
  std::string out;
  for (const auto& m : monos) {
    long c;
    if constexpr (F::is_finite) {
      c = static_cast<long>(rng.below(F::characteristic));
    } else {
      c = rng.between(-2, 2);
    }
    if (m.empty() && !rng.chance(unit_odds)) c = 0;
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const long mag = c < 0 ? -c : c;
    if (m.empty()) {
      out += std::to_string(mag);
    } else {
      out += mag == 1 ? m : std::to_string(mag) + "*" + m;
    }
  }
  return out.empty() ? "0" : out;
}

/// Presentation rows for Rⁿ/(columns) with 1–2 generators and 1–3 columns.
template <Field F>
std::vector<std::vector<std::string>> random_presentation(const ArtinAlgebra<F>& R, Rng& rng) {
  const std::size_t gens = 1 + rng.below(2);
  const std::size_t cols = 1 + rng.below(3);
  std::vector<std::vector<std::string>> rows(gens);
  for (auto& row : rows)
    for (std::size_t c = 0; c < cols; ++c) row.push_back(random_polynomial<F>(R.variables(), rng, 0));
  return rows;
}

template <Field F>
ModuleRep<F> random_module(const ArtinAlgebra<F>& R, Rng& rng) {
  const auto rows = random_presentation(R, rng);
  return module_from_presentation<F>(R, rows, rows.size());
}

/// 1–2 generators without constant term, so the ideal lies in m.
template <Field F>
std::vector<std::string> random_ideal_generators(const ArtinAlgebra<F>& R, Rng& rng) {
  std::vector<std::string> gens(1 + rng.below(2));
  for (auto& g : gens) g = random_polynomial<F>(R.variables(), rng, 1);
  return gens;
}

template <Field F>
Ideal<F> random_ideal(const ArtinAlgebra<F>& R, Rng& rng) {
  return ideal_from_polynomials<F>(R, random_ideal_generators(R, rng));
}

/// Fixed probes for sampled predicates over Q: 0, R, m, the ideals generated
/// by single variables, and those generated by socle basis elements.
template <Field F>
std::vector<Ideal<F>> probe_ideals(const ArtinAlgebra<F>& R) {
  std::vector<Ideal<F>> out{zero_ideal(R), unit_ideal(R), maximal_ideal(R)};
  const auto soc = socle(regular_module(R)).carrier();
  for (std::size_t j = 0; j < soc.dim(); ++j) out.push_back(principal_ideal(R, soc.vector(j)));
  for (std::size_t i = 0; i < R.num_variables(); ++i)
    out.push_back(principal_ideal(R, R.element(R.variables()[i])));
  return out;
}

/// probe_ideals followed by `count` seeded random ideals.
template <Field F>
std::vector<Ideal<F>> sample_ideals(const ArtinAlgebra<F>& R, Rng& rng, std::size_t count) {
  auto out = probe_ideals(R);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_ideal(R, rng));
  return out;
}

}  // namespace tracelab
