#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tracelab/error.hpp"

namespace tracelab {

/// A cofinite submonoid S of ℕ, the value semigroup of k[[t^S]].
class NumericalSemigroup {
 public:
  static NumericalSemigroup make(std::vector<long> gens) {
    if (gens.empty()) throw Error(ErrorKind::EmptyGenerators, "semigroup needs generators");
    long g = 0;
    for (long a : gens) {
      if (a <= 0) throw Error(ErrorKind::InvalidArgument, "generators must be positive");
      g = std::gcd(g, a);
    }
    if (g != 1) {
      throw Error(ErrorKind::NotCoFinite,
                  "generators have gcd " + std::to_string(g) + ", so S is not cofinite in ℕ");
    }
    NumericalSemigroup s;
    s.generators_ = gens;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    s.multiplicity_ = gens.front();
    // Grow the membership table until e consecutive members appear.
    std::vector<char> in{1};
    long run = 1;
    long n = 0;
    while (run < s.multiplicity_) {
      ++n;
      bool member = false;
      for (long a : gens)
        if (a <= n && in[static_cast<std::size_t>(n - a)]) member = true;
      in.push_back(member ? 1 : 0);
      run = member ? run + 1 : 0;
    }
    s.conductor_ = n - s.multiplicity_ + 1;
    for (long k = 0; k < s.conductor_; ++k) {
      if (in[static_cast<std::size_t>(k)]) {
        s.small_.push_back(k);
      } else {
        s.gaps_.push_back(k);
      }
    }
    for (long a : gens) {
      bool decomposable = false;
      for (long b = 1; b < a && !decomposable; ++b)
        if (s.contains(b) && s.contains(a - b)) decomposable = true;
      if (!decomposable) s.minimal_.push_back(a);
    }
    return s;
  }

  bool contains(long n) const {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return std::binary_search(small_.begin(), small_.end(), n);
  }

  const std::vector<long>& generators() const { return generators_; }
  const std::vector<long>& minimal_generators() const { return minimal_; }
  const std::vector<long>& gaps() const { return gaps_; }
  /// Members below the conductor.
  const std::vector<long>& small_elements() const { return small_; }
  long conductor() const { return conductor_; }
  long frobenius() const { return conductor_ - 1; }
  long multiplicity() const { return multiplicity_; }
  std::size_t embedding_dimension() const { return minimal_.size(); }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.conductor_ == b.conductor_ && a.small_ == b.small_;
  }

 private:
  std::vector<long> generators_;
  std::vector<long> minimal_;
  std::vector<long> gaps_;
  std::vector<long> small_;
  long conductor_ = 0;
  long multiplicity_ = 1;
};

/// A monomial fractional ideal, stored as its members below the conductor;
/// every integer ≥ conductor is a member and conductor − 1 is not.
class ValueSet {
 public:
  /// {z ≥ lo : pred(z)} ∪ [hi, ∞), normalised.
  static ValueSet from_predicate(long lo, long hi, const std::function<bool(long)>& pred) {
    ValueSet v;
    hi = std::max(lo, hi);
    while (hi > lo && pred(hi - 1)) --hi;
    v.conductor_ = hi;
    for (long z = lo; z < hi; ++z)
      if (pred(z)) v.below_.push_back(z);
    return v;
  }

  long conductor() const { return conductor_; }
  const std::vector<long>& below_conductor() const { return below_; }
  long min() const { return below_.empty() ? conductor_ : below_.front(); }

  bool contains(long z) const {
    if (z >= conductor_) return true;
    return std::binary_search(below_.begin(), below_.end(), z);
  }

  ValueSet shifted(long z) const {
    ValueSet v = *this;
    v.conductor_ += z;
    for (auto& b : v.below_) b += z;
    return v;
  }

  std::string to_string() const {
    std::string out = "{";
    for (long b : below_) out += std::to_string(b) + ", ";
    return out + "n >= " + std::to_string(conductor_) + "}";
  }

  friend bool operator==(const ValueSet&, const ValueSet&) = default;

 private:
  long conductor_ = 0;
  std::vector<long> below_;
};

inline ValueSet whole_semigroup(const NumericalSemigroup& S) {
  return ValueSet::from_predicate(0, S.conductor(), [&](long z) { return S.contains(z); });
}

/// ∪ᵢ (vᵢ + S)
inline ValueSet ideal(const std::vector<long>& gens, const NumericalSemigroup& S) {
  if (gens.empty()) throw Error(ErrorKind::EmptyGenerators, "ideal needs generators");
  const long lo = *std::min_element(gens.begin(), gens.end());
  return ValueSet::from_predicate(lo, lo + S.conductor(), [&](long z) {
    for (long v : gens)
      if (S.contains(z - v)) return true;
    return false;
  });
}

inline ValueSet maximal_ideal(const NumericalSemigroup& S) {
  return ideal(S.minimal_generators(), S);
}

/// E + F
inline ValueSet sumset(const ValueSet& E, const ValueSet& F) {
  const long lo = E.min() + F.min();
  const long hi = std::min(E.conductor() + F.min(), F.conductor() + E.min());
  return ValueSet::from_predicate(lo, hi, [&](long z) {
    for (long e = E.min(); e <= z - F.min(); ++e)
      if (E.contains(e) && F.contains(z - e)) return true;
    return false;
  });
}

inline ValueSet set_union(const ValueSet& E, const ValueSet& F) {
  return ValueSet::from_predicate(std::min(E.min(), F.min()),
                                  std::min(E.conductor(), F.conductor()),
                                  [&](long z) { return E.contains(z) || F.contains(z); });
}

/// (E : F) = {z : z + F ⊆ E}
inline ValueSet colon(const ValueSet& E, const ValueSet& F) {
  const long lo = E.min() - F.min();
  const long hi = E.conductor() - F.min();
  return ValueSet::from_predicate(lo, hi, [&](long z) {
    for (long f = F.min(); z + f < E.conductor(); ++f)
      if (F.contains(f) && !E.contains(z + f)) return false;
    return true;
  });
}

inline ValueSet set_intersection(const ValueSet& E, const ValueSet& F) {
  return ValueSet::from_predicate(std::max(E.min(), F.min()),
                                  std::max(E.conductor(), F.conductor()),
                                  [&](long z) { return E.contains(z) && F.contains(z); });
}

/// (E :_S F) = (E : F) ∩ S
inline ValueSet colon_in(const ValueSet& E, const ValueSet& F, const NumericalSemigroup& S) {
  return set_intersection(colon(E, F), whole_semigroup(S));
}

/// E⁻¹ = (S : E)
inline ValueSet inverse(const ValueSet& E, const NumericalSemigroup& S) {
  return colon(whole_semigroup(S), E);
}

/// mⁿ
inline ValueSet power_m(const NumericalSemigroup& S, unsigned n) {
  if (n == 0) return whole_semigroup(S);
  const ValueSet m = maximal_ideal(S);
  ValueSet p = m;
  for (unsigned k = 1; k < n; ++k) p = sumset(p, m);
  return p;
}

/// γ_E(R) = E·E⁻¹
inline ValueSet trace_value(const ValueSet& E, const NumericalSemigroup& S) {
  return sumset(E, inverse(E, S));
}

inline bool self_colon_eq_inverse(const ValueSet& E, const NumericalSemigroup& S) {
  return colon(E, E) == inverse(E, S);
}

inline bool is_good(const ValueSet& E, const NumericalSemigroup& S) {
  const bool good = trace_value(E, S) == E;
  ensure(good == self_colon_eq_inverse(E, S), "goodness and the colon criterion disagree");
  return good;
}

/// Minimal number of generators |E ∖ (m + E)|.
inline std::size_t v_count(const ValueSet& E, const NumericalSemigroup& S) {
  const ValueSet mE = sumset(maximal_ideal(S), E);
  std::size_t n = 0;
  for (long z = E.min(); z < std::max(E.conductor(), mE.conductor()); ++z)
    if (E.contains(z) && !mE.contains(z)) ++n;
  return n;
}

/// Least n ≥ 1 with v(mⁿ) = e, checked to persist for three more powers.
inline unsigned nu_index(const NumericalSemigroup& S) {
  const auto e = static_cast<std::size_t>(S.multiplicity());
  const unsigned limit = static_cast<unsigned>(S.conductor() + S.multiplicity()) + 4;
  for (unsigned n = 1; n <= limit; ++n) {
    if (v_count(power_m(S, n), S) != e) continue;
    for (unsigned k = n + 1; k <= n + 3; ++k)
      ensure(v_count(power_m(S, k), S) == e, "v(m^n) = e did not persist");
    return n;
  }
  throw Error(ErrorKind::Internal, "v(m^n) never reached the multiplicity");
}

/// Λ = ∪ₛ (mˢ − s·e); the terms increase, so the first repeat is the union.
inline ValueSet lambda(const NumericalSemigroup& S) {
  const long e = S.multiplicity();
  ValueSet prev = maximal_ideal(S).shifted(-e);
  for (unsigned s = 2;; ++s) {
    ValueSet next = power_m(S, s).shifted(-e * static_cast<long>(s));
    if (next == prev) return prev;
    prev = std::move(next);
  }
}

inline ValueSet lambda_inverse(const NumericalSemigroup& S) {
  return inverse(lambda(S), S);
}

inline bool is_dvr(const NumericalSemigroup& S) { return S.conductor() == 0; }

/// m is good exactly when S ≠ ℕ.
inline bool good_prime_check(const NumericalSemigroup& S) {
  return is_good(maximal_ideal(S), S) == !is_dvr(S);
}

inline bool is_integral(const ValueSet& E, const NumericalSemigroup& S) {
  if (E.min() < 0) return false;
  for (long z : E.below_conductor())
    if (!S.contains(z)) return false;
  for (long z = E.conductor(); z < S.conductor(); ++z)
    if (!S.contains(z)) return false;
  return true;
}

/// dim_k Ext¹(R/I, R) = |E⁻¹ ∖ S| for E ⊆ S.
inline std::size_t ext1_dim(const ValueSet& E, const NumericalSemigroup& S) {
  if (!is_integral(E, S)) throw Error(ErrorKind::IdealNotIntegral, "ideal is not inside S");
  const ValueSet inv = inverse(E, S);
  std::size_t n = 0;
  for (long z = inv.min(); z < S.conductor(); ++z)
    if (inv.contains(z) && !S.contains(z)) ++n;
  return n;
}

struct PowerRow {
  unsigned n;
  std::size_t v;
  ValueSet power;
  ValueSet trace;
};

struct SemigroupReport {
  long multiplicity;
  std::size_t v_m;
  std::vector<PowerRow> table;
  unsigned nu;
  ValueSet lambda;
  ValueSet lambda_inverse;
  bool stable_trace_verdict;  ///< γ_{mⁿ}(R) = Λ⁻¹ for ν ≤ n ≤ n_max
  /// Only for v(m) = 2: ν = e − 1 and Λ⁻¹ = m^{e−1}.
  std::optional<bool> two_generator_verdict;
};

inline SemigroupReport matlis_report(const NumericalSemigroup& S, std::optional<unsigned> n_max = {}) {
  const unsigned nu = nu_index(S);
  const unsigned top = n_max.value_or(nu + 4);
  if (top < nu + 3) {
    throw Error(ErrorKind::InvalidArgument, "max power must be at least nu + 3 = " +
                                                std::to_string(nu + 3));
  }
  SemigroupReport r{S.multiplicity(), v_count(maximal_ideal(S), S), {}, nu, lambda(S),
                    lambda_inverse(S), true, std::nullopt};
  for (unsigned n = 1; n <= top; ++n) {
    ValueSet p = power_m(S, n);
    ValueSet t = trace_value(p, S);
    if (n >= nu && !(t == r.lambda_inverse)) r.stable_trace_verdict = false;
    r.table.push_back({n, v_count(p, S), std::move(p), std::move(t)});
  }
  if (r.v_m == 2) {
    const auto e1 = static_cast<unsigned>(S.multiplicity() - 1);
    r.two_generator_verdict = nu == e1 && power_m(S, e1) == r.lambda_inverse;
  }
  return r;
}

}  // namespace tracelab
