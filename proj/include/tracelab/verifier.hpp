#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tracelab/enumerate.hpp"
#include "tracelab/predicates.hpp"
#include "tracelab/random.hpp"
#include "tracelab/report.hpp"
#include "tracelab/semigroup.hpp"
#include "tracelab/spec_file.hpp"
#include "tracelab/trace.hpp"

namespace tracelab {

struct Failure {
  std::string check;
  Json instance;
  Json lhs;
  Json rhs;
  std::string detail;
};

struct CheckTally {
  std::size_t runs = 0;
  std::size_t failures = 0;
};

struct SuiteResult {
  std::string suite;
  std::size_t checks_run = 0;
  std::size_t failure_count = 0;
  std::map<std::string, CheckTally> tallies;
  std::vector<Failure> failures;  ///< the first few, in full
  double elapsed_ms = 0;

  bool passed() const { return failure_count == 0; }

  Json to_json(bool timing = false) const {
    Json checks = Json::object();
    for (const auto& [name, t] : tallies)
      checks[name] = {{"runs", t.runs}, {"failures", t.failures}};
    Json fails = Json::array();
    for (const auto& f : failures) {
      fails.push_back({{"check", f.check},
                       {"instance", f.instance},
                       {"lhs", f.lhs},
                       {"rhs", f.rhs},
                       {"detail", f.detail}});
    }
    Json j = {{"suite", suite},
              {"passed", passed()},
              {"checks_run", checks_run},
              {"failure_count", failure_count},
              {"checks", std::move(checks)},
              {"failures", std::move(fails)}};
    if (timing) j["elapsed_ms"] = elapsed_ms;
    return j;
  }
};

/// Collects check outcomes; failure payloads are only built on failure.
class Recorder {
 public:
  explicit Recorder(SuiteResult& r, std::size_t keep = 20) : r_(r), keep_(keep) {}

  using InstanceFn = std::function<Json()>;

  void expect(const std::string& check, bool ok, const InstanceFn& instance, Json lhs = nullptr,
              Json rhs = nullptr, std::string detail = {}) {
    auto& t = r_.tallies[check];
    ++t.runs;
    ++r_.checks_run;
    if (ok) return;
    ++t.failures;
    ++r_.failure_count;
    if (r_.failures.size() < keep_)
      r_.failures.push_back({check, instance(), std::move(lhs), std::move(rhs), std::move(detail)});
  }

  template <Field F>
  void expect_equal(const std::string& check, const Subspace<F>& a, const Subspace<F>& b,
                    const InstanceFn& instance) {
    const bool ok = a == b;
    if (ok) {
      expect(check, true, instance);
    } else {
      expect(check, false, instance, tracelab::to_json(a), tracelab::to_json(b));
    }
  }

  template <Field F>
  void expect_contains(const std::string& check, const Subspace<F>& outer,
                       const Subspace<F>& inner, const InstanceFn& instance) {
    const bool ok = contains(outer, inner);
    if (ok) {
      expect(check, true, instance);
    } else {
      expect(check, false, instance, tracelab::to_json(outer), tracelab::to_json(inner),
             "lhs does not contain rhs");
    }
  }

 private:
  SuiteResult& r_;
  std::size_t keep_;
};

namespace detail {

template <Field F>
struct NamedModule {
  ModuleRep<F> module;
  Json source;
};

/// Modules and ideals for one algebra over one field, plus the (I, M) pairs
/// to test. Over F_p the ideals include every cyclic ideal and all pairs are
/// formed; over Q fixed probes are joined by seeded random pairs.
template <Field F>
struct Workload {
  std::string name;
  ArtinAlgebra<F> R;
  std::vector<NamedModule<F>> modules;
  std::vector<Ideal<F>> ideals;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  ///< (ideal, module)
  Evidence evidence;
};

template <Field F>
Json instance_json(const Workload<F>& w, const Ideal<F>* I, const NamedModule<F>* M) {
  Json j = {{"algebra_name", w.name},
            {"algebra", algebra_json(w.R)},
            {"field", F::name()}};
  if (I) j["ideal"] = ideal_json(*I);
  if (M) {
    j["module"] = module_json(M->module);
    j["module_source"] = M->source;
  }
  return j;
}

template <Field F>
Workload<F> build_workload(const AlgebraEntry& entry, const VerifyOptions& opt,
                           std::uint64_t stream) {
  const auto R = build_algebra<F>(entry.presentation(F::name()));
  check_polynomials(entry, entry.modules, entry.ideals);
  Workload<F> w{entry.name, R, {}, {}, {}, F::is_finite ? Evidence::Exhaustive : Evidence::Sampled};
  Rng rng(substream(opt.seed, stream));

  const auto regular = regular_module(R);
  w.modules.push_back({regular, {{"kind", "regular"}}});
  w.modules.push_back({quotient(as_submodule(maximal_ideal(R), regular)).module,
                       {{"kind", "residue_field"}}});
  w.modules.push_back({matlis_dual(regular), {{"kind", "dual_of_regular"}}});
  for (const auto& m : entry.modules) {
    w.modules.push_back({module_from_presentation<F>(R, m.row_texts(), m.generators),
                         {{"kind", "listed"}, {"name", m.name}, {"rows", m.row_texts()}}});
  }

  std::vector<Ideal<F>> fixed;
  if constexpr (F::is_finite) {
    fixed = enumerate_cyclic_ideals(R, opt.cap_enum);
  } else {
    fixed = probe_ideals(R);
  }
  for (const auto& i : entry.ideals) fixed.push_back(ideal_from_polynomials<F>(R, i.texts()));
  w.ideals = fixed;

  if constexpr (F::is_finite) {
    for (std::size_t k = 0; k < opt.random_modules; ++k) {
      const auto rows = random_presentation(R, rng);
      w.modules.push_back({module_from_presentation<F>(R, rows, rows.size()),
                           {{"kind", "random"}, {"rows", rows}}});
    }
    for (std::size_t i = 0; i < w.ideals.size(); ++i)
      for (std::size_t m = 0; m < w.modules.size(); ++m) w.pairs.emplace_back(i, m);
  } else {
    // Random pairs first, so the leading pairs are the seeded ones.
    const std::size_t fixed_modules = w.modules.size();
    for (std::size_t k = 0; k < opt.random_instances; ++k) {
      const auto rows = random_presentation(R, rng);
      const auto gens = random_ideal_generators(R, rng);
      w.modules.push_back({module_from_presentation<F>(R, rows, rows.size()),
                           {{"kind", "random"}, {"rows", rows}}});
      w.ideals.push_back(ideal_from_polynomials<F>(R, gens));
      w.pairs.emplace_back(w.ideals.size() - 1, w.modules.size() - 1);
    }
    for (std::size_t i = 0; i < fixed.size(); ++i)
      for (std::size_t m = 0; m < fixed_modules; ++m) w.pairs.emplace_back(i, m);
  }
  return w;
}

/// Calls fn.template operator()<F>(entry, index) for every (algebra, field).
template <class Fn>
void for_each_algebra(const InstanceSpec& spec, Fn&& fn) {
  std::uint64_t index = 0;
  for (const auto& a : spec.algebras) {
    for (const auto& field : a.fields) {
      dispatch_field(field, [&]<Field F>() { fn.template operator()<F>(a, index); });
      ++index;
    }
  }
}

/// Per-(I, M) quantities shared by several checks.
template <Field F>
struct PairData {
  Submodule<F> IM;
  Submodule<F> gamma;
  Submodule<F> kill_ann;  ///< M[Ann I]
  Submodule<F> kill_I;    ///< M[I]
  Submodule<F> ann_M;     ///< Ann(I)·M
  bool excellent;
};

template <Field F>
PairData<F> pair_data(const Ideal<F>& I, const ModuleRep<F>& M, Defect defect) {
  auto IM = ideal_times_module(I, M);
  auto g = gamma(I, M, defect);
  const auto annI = annihilator(I);
  auto ka = kill(M, annI);
  auto ki = kill(M, I);
  auto am = ideal_times_module(annI, M);
  const bool ex = g == IM;
  return {std::move(IM), std::move(g), std::move(ka), std::move(ki), std::move(am), ex};
}

/// Direct sum M ⊕ W with the inclusion of M and the projection onto W.
template <Field F>
struct Split {
  ModuleRep<F> sum;
  Matrix<F> include_first;
  Matrix<F> project_second;
};

template <Field F>
Split<F> split(const ModuleRep<F>& M, const ModuleRep<F>& W) {
  const std::size_t m = M.dim();
  const std::size_t w = W.dim();
  Matrix<F> inc(m + w, m);
  for (std::size_t i = 0; i < m; ++i) inc(i, i) = F(1);
  Matrix<F> proj(w, m + w);
  for (std::size_t i = 0; i < w; ++i) proj(i, m + i) = F(1);
  return {direct_sum(M, W), std::move(inc), std::move(proj)};
}

template <Field F>
ModuleRep<F> residue_field(const ArtinAlgebra<F>& R) {
  const auto reg = regular_module(R);
  return quotient(as_submodule(maximal_ideal(R), reg)).module;
}

template <Field F>
Ideal<F> socle_ideal(const ArtinAlgebra<F>& R) {
  return Ideal<F>(R, socle(regular_module(R)).carrier());
}

inline double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Traces, Ext¹ and excellence.

template <Field F>
void section1_workload(const detail::Workload<F>& w, const VerifyOptions& opt, Defect defect,
                       Recorder& rec) {
  using detail::instance_json;
  const auto& R = w.R;
  const auto regular = regular_module(R);
  const auto k = detail::residue_field(R);
  std::vector<bool> cyclic(w.ideals.size());
  for (std::size_t i = 0; i < w.ideals.size(); ++i) cyclic[i] = is_cyclic(w.ideals[i]);

  // excellent[m] stays true while every tested ideal passes.
  std::vector<bool> excellent(w.modules.size(), true);
  std::map<std::pair<std::size_t, std::size_t>, bool> pair_excellent;
  std::size_t two_route = 0;

  for (const auto& [ii, mi] : w.pairs) {
    const auto& I = w.ideals[ii];
    const auto& NM = w.modules[mi];
    const auto& M = NM.module;
    const auto inst = [&] { return instance_json(w, &I, &NM); };
    const auto d = detail::pair_data(I, M, defect);
    pair_excellent[{ii, mi}] = d.excellent;
    if (!d.excellent) excellent[mi] = false;

    rec.expect_contains("trace_contains_IM", d.gamma.carrier(), d.IM.carrier(), inst);
    rec.expect_contains("trace_inside_kill_ann", d.kill_ann.carrier(), d.gamma.carrier(), inst);

    const HomModule<F> H(ideal_module(I), M);
    const bool g0 = d.gamma.is_zero();
    const bool h0 = H.dim() == 0;
    const bool trivial = I.is_zero() || M.dim() == 0;
    rec.expect("trace_zero_iff_hom_zero", g0 == h0 && h0 == trivial, inst,
               {{"gamma_zero", g0}, {"hom_zero", h0}}, {{"I_or_M_zero", trivial}});

    if (cyclic[ii]) {
      rec.expect_equal("cyclic_trace_formula", d.gamma.carrier(), d.kill_ann.carrier(), inst);
    }

    const auto s = sigma(I, M);
    const std::size_t e1 = ext1(I, M).dim();
    rec.expect("ext1_zero_iff_excellent_and_sigma_onto",
               (e1 == 0) == (d.excellent && s.surjective), inst, {{"ext1_dim", e1}},
               {{"excellent", d.excellent}, {"sigma_surjective", s.surjective}});
    if (cyclic[ii]) {
      const std::size_t formula = d.kill_ann.dim() - d.IM.dim();
      rec.expect("cyclic_sigma_onto_and_ext1_formula", s.surjective && e1 == formula, inst,
                 {{"ext1_dim", e1}, {"sigma_surjective", s.surjective}},
                 {{"dim M[Ann I] - dim IM", formula}});
    }

    if (two_route < opt.two_route_instances || F::is_finite) {
      ++two_route;
      const auto emb = embed_into_injective(M);
      const auto via_colon = trace_via_colon(M, emb, I);
      rec.expect_equal("trace_via_injective_hull", d.gamma.carrier(), via_colon.carrier(), inst);

      const auto a = alpha(emb.image, I);
      const auto torsion = intersect(a.domain.carrier(), kill(emb.X, I).carrier());
      rec.expect("alpha_kernel_and_onto", a.kernel == torsion && a.map.surjective, inst,
                 {{"kernel_dim", a.kernel.dim()}, {"surjective", a.map.surjective}},
                 {{"torsion_dim", torsion.dim()}});
    }

    // M as a summand of M ⊕ k: traces restrict and project.
    const auto sp = detail::split(M, k);
    const auto gs = gamma(I, sp.sum, defect);
    const auto U = Subspace<F>::span(sp.include_first);
    rec.expect_equal("summand_trace_restricts", image(sp.include_first, d.gamma.carrier()),
                     intersect(U, gs.carrier()), inst);
    rec.expect_equal("summand_trace_projects", image(sp.project_second, gs.carrier()),
                     gamma(I, k, defect).carrier(), inst);
    const bool k_excellent = gamma(I, k, defect) == ideal_times_module(I, k);
    if (d.excellent && k_excellent) {
      rec.expect("direct_sum_stays_excellent",
                 gs.carrier() == ideal_times_module(I, sp.sum).carrier(), inst);
    }
  }

  // Sums of ideals: excellence for I and J gives excellence for I + J.
  for (std::size_t mi = 0; mi < w.modules.size(); ++mi) {
    std::vector<std::size_t> good;
    for (const auto& [key, ex] : pair_excellent)
      if (key.second == mi && ex) good.push_back(key.first);
    for (std::size_t a = 0; a + 1 < good.size() && a < 6; ++a) {
      const auto& I = w.ideals[good[a]];
      const auto& J = w.ideals[good[a + 1]];
      const auto IJ = ideal_sum(I, J);
      const auto& NM = w.modules[mi];
      rec.expect("ideal_sum_stays_excellent",
                 gamma(IJ, NM.module, defect) == ideal_times_module(IJ, NM.module),
                 [&] { return instance_json(w, &IJ, &NM); });
    }
  }

  // QF ⟺ R excellent. The probes contain a cyclic ideal generated by a
  // socle element, which witnesses non-excellence when the socle is larger.
  const bool qf = is_qf(R);
  rec.expect("qf_iff_regular_excellent", qf == excellent[0],
             [&] { return instance_json<F>(w, nullptr, &w.modules[0]); }, {{"qf", qf}},
             {{"excellent", static_cast<bool>(excellent[0])}, {"evidence", to_string(w.evidence)}});

  if constexpr (F::is_finite) {
    const auto socR = detail::socle_ideal(R);
    for (std::size_t mi = 0; mi < w.modules.size(); ++mi) {
      if (!excellent[mi]) continue;
      const auto& NM = w.modules[mi];
      const auto& M = NM.module;
      const auto inst = [&] { return instance_json<F>(w, nullptr, &NM); };
      rec.expect("excellent_radical_part_vanishes", radical_part(M).is_zero(), inst);
      bool divisible = true;
      for (const auto& r : elements(Subspace<F>::full(R.dim()), opt.cap_enum)) {
        const Matrix<F> act = M.act(r);
        const auto rM = image(act, Subspace<F>::full(M.dim()));
        bool found = false;
        Matrix<F> power = act;
        for (std::size_t e = 1; e <= R.dim() + 1 && !found; ++e, power = power * act)
          found = sum(kernel(power), rM).is_full();
        divisible = divisible && found;
      }
      rec.expect("excellent_power_torsion_splits", divisible, inst);
      const bool faithful = annihilator(M).is_zero();
      const bool soc_nonzero = !socle(M).is_zero();
      rec.expect("excellent_socle_gives_faithful", !soc_nonzero || faithful, inst);
      const auto sR_M = ideal_times_module(socR, M);
      rec.expect_equal("excellent_socle_products", sR_M.carrier(), socle(M).carrier(), inst);
      rec.expect("excellent_socle_product_essential", is_essential(sR_M), inst);
      rec.expect("excellent_nonzero_is_faithful", M.dim() == 0 || faithful, inst);
      if (min_gens(M).count == 1) {
        const bool iso = find_isomorphism(M, regular, opt.cap_enum).has_value();
        rec.expect("excellent_cyclic_is_free_over_qf", iso && qf, inst, {{"isomorphic_to_R", iso}},
                   {{"qf", qf}});
      }
    }

    // No nonzero proper ideal, and no proper quotient, is excellent.
    if (R.dim() <= opt.exhaustive_max_dim) {
      const auto cyc = enumerate_cyclic_ideals(R, opt.cap_enum);
      for (const auto& a : enumerate_ideals(R, opt.cap_enum)) {
        if (a.is_zero() || a.is_unit()) continue;
        const auto am = ideal_module(a);
        const auto q = quotient(as_submodule(a, regular)).module;
        const bool a_ex = is_excellent(am, cyc, opt.cap_enum).value;
        const bool q_ex = is_excellent(q, cyc, opt.cap_enum).value;
        rec.expect("proper_ideal_and_quotient_not_excellent", !a_ex && !q_ex,
                   [&] { return instance_json<F>(w, &a, nullptr); },
                   {{"ideal_excellent", a_ex}}, {{"quotient_excellent", q_ex}});
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Cotraces, Tor₁ and Matlis duality.

template <Field F>
void section3_workload(const detail::Workload<F>& w, const VerifyOptions& opt, Recorder& rec) {
  using detail::instance_json;
  const auto& R = w.R;
  const auto regular = regular_module(R);
  const auto k = detail::residue_field(R);
  const auto socR = detail::socle_ideal(R);
  const auto m = maximal_ideal(R);
  std::vector<bool> cyclic(w.ideals.size());
  for (std::size_t i = 0; i < w.ideals.size(); ++i) cyclic[i] = is_cyclic(w.ideals[i]);
  std::vector<bool> coexcellent(w.modules.size(), true);

  for (const auto& [ii, mi] : w.pairs) {
    const auto& I = w.ideals[ii];
    const auto& NM = w.modules[mi];
    const auto& M = NM.module;
    const auto inst = [&] { return instance_json(w, &I, &NM); };
    const auto d = detail::pair_data(I, M, Defect::None);
    const auto kap = kappa(I, M);
    const bool coex = kap == d.kill_I;
    if (!coex) coexcellent[mi] = false;

    rec.expect_contains("cotrace_contains_ann_times_M", kap.carrier(), d.ann_M.carrier(), inst);
    rec.expect_contains("cotrace_inside_kill", d.kill_I.carrier(), kap.carrier(), inst);

    const std::size_t tensor_dim = tensor_product(M, ideal_module(I)).module.dim();
    const bool whole_kappa = kap.carrier().is_full();
    const bool trivial = I.is_zero() || M.dim() == 0;
    rec.expect("cotrace_full_iff_tensor_zero",
               whole_kappa == (tensor_dim == 0) && (tensor_dim == 0) == trivial, inst,
               {{"cotrace_is_M", whole_kappa}, {"tensor_dim", tensor_dim}},
               {{"I_or_M_zero", trivial}});
    if (cyclic[ii]) {
      rec.expect_equal("cyclic_cotrace_formula", kap.carrier(), d.ann_M.carrier(), inst);
    }

    const auto b = beta(M, I);
    const std::size_t t1 = tor1(M, I).dim();
    rec.expect("tor1_zero_iff_coexcellent_and_beta_injective",
               (t1 == 0) == (coex && b.injective), inst, {{"tor1_dim", t1}},
               {{"coexcellent", coex}, {"beta_injective", b.injective}});
    if (cyclic[ii]) {
      const std::size_t formula = d.kill_I.dim() - d.ann_M.dim();
      rec.expect("cyclic_beta_injective_and_tor1_formula", b.injective && t1 == formula, inst,
                 {{"tor1_dim", t1}, {"beta_injective", b.injective}},
                 {{"dim M[I] - dim Ann(I)M", formula}});
    }

    const auto D = matlis_dual(M);
    const std::size_t e1_dual = ext1(I, D).dim();
    rec.expect("ext1_of_dual_matches_tor1", e1_dual == t1, inst, {{"ext1_dual_dim", e1_dual}},
               {{"tor1_dim", t1}});
    const bool sigma_dual_onto = sigma(I, D).surjective;
    rec.expect("beta_injective_iff_dual_sigma_onto", b.injective == sigma_dual_onto, inst,
               {{"beta_injective", b.injective}}, {{"dual_sigma_surjective", sigma_dual_onto}});

    const auto gD = gamma(I, D);
    const auto kD = kappa(I, D);
    rec.expect_equal("dual_trace_is_annihilator_of_cotrace", gD.carrier(),
                     ann_in_dual(kap, D).carrier(), inst);
    rec.expect_equal("dual_cotrace_is_annihilator_of_trace", kD.carrier(),
                     ann_in_dual(d.gamma, D).carrier(), inst);
    const bool dual_ex = gD == ideal_times_module(I, D);
    const bool dual_coex = kD == kill(D, I);
    rec.expect("coexcellent_iff_dual_excellent", coex == dual_ex, inst, {{"coexcellent", coex}},
               {{"dual_excellent", dual_ex}});
    rec.expect("excellent_iff_dual_coexcellent", d.excellent == dual_coex, inst,
               {{"excellent", d.excellent}}, {{"dual_coexcellent", dual_coex}});
    rec.expect_equal("dual_of_kill_is_product", ann_in_dual(d.kill_I, D).carrier(),
                     ideal_times_module(I, D).carrier(), inst);

    const auto sp = detail::split(M, k);
    const auto ks = kappa(I, sp.sum);
    const auto U = Subspace<F>::span(sp.include_first);
    rec.expect_equal("summand_cotrace_restricts", image(sp.include_first, kap.carrier()),
                     intersect(U, ks.carrier()), inst);
    rec.expect_equal("summand_cotrace_projects", image(sp.project_second, ks.carrier()),
                     kappa(I, k).carrier(), inst);
  }

  if constexpr (F::is_finite) {
    for (std::size_t mi = 0; mi < w.modules.size(); ++mi) {
      if (!coexcellent[mi]) continue;
      const auto& NM = w.modules[mi];
      const auto& M = NM.module;
      const auto inst = [&] { return instance_json<F>(w, nullptr, &NM); };
      bool torsion_free = true;
      for (const auto& r : elements(Subspace<F>::full(R.dim()), opt.cap_enum)) {
        const Matrix<F> act = M.act(r);
        const auto kr = kernel(act);
        bool found = false;
        Matrix<F> power = act;
        for (std::size_t e = 1; e <= R.dim() + 1 && !found; ++e, power = power * act)
          found = intersect(image(power, Subspace<F>::full(M.dim())), kr).is_zero();
        torsion_free = torsion_free && found;
      }
      rec.expect("coexcellent_power_image_meets_kernel_trivially", torsion_free, inst);
      const auto mM = ideal_times_module(m, M);
      const bool faithful = annihilator(M).is_zero();
      rec.expect("coexcellent_top_gives_faithful", mM.carrier().is_full() || faithful, inst);
      const auto kill_soc = kill(M, socR);
      rec.expect_equal("coexcellent_radical_is_socle_kernel", mM.carrier(), kill_soc.carrier(),
                       inst);
      rec.expect("coexcellent_socle_kernel_small", is_small(kill_soc), inst);
      rec.expect("coexcellent_nonzero_is_faithful", M.dim() == 0 || faithful, inst);
      if (socle(M).dim() == 1) {
        const bool iso = find_isomorphism(M, matlis_dual(regular), opt.cap_enum).has_value();
        const bool qf = is_qf(R);
        rec.expect("coexcellent_cocyclic_is_dual_over_qf", iso && qf, inst,
                   {{"isomorphic_to_dual", iso}}, {{"qf", qf}});
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Good ideals: Artinian lattice checks and the semigroup model.

template <Field F>
void section2_algebra(const detail::Workload<F>& w, const VerifyOptions& opt, Recorder& rec) {
  using detail::instance_json;
  const auto& R = w.R;
  const bool qf = is_qf(R);
  const auto inst_R = [&] { return instance_json<F>(w, nullptr, nullptr); };

  std::vector<Ideal<F>> ideals;
  bool all_ideals = false;
  if constexpr (F::is_finite) {
    if (R.dim() <= opt.exhaustive_max_dim) {
      ideals = enumerate_ideals(R, opt.cap_enum);
      all_ideals = true;
    }
  }
  if (!all_ideals) {
    ideals = w.ideals;
    ideals.push_back(detail::socle_ideal(R));
  }

  bool ends_commute = true;
  for (const auto& I : ideals) ends_commute = ends_commute && end_commutative(I);
  const bool soc_nonzero = !socle(regular_module(R)).is_zero();
  rec.expect("qf_iff_endomorphisms_commute", qf == (soc_nonzero && ends_commute), inst_R,
             {{"qf", qf}}, {{"socle_nonzero", soc_nonzero}, {"ends_commute", ends_commute},
                            {"evidence", all_ideals ? "exhaustive" : "sampled"}});

  const auto regular = regular_module(R);
  std::vector<Subspace<F>> traces;
  std::vector<std::size_t> good;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const auto& I = ideals[i];
    const auto inst = [&] { return instance_json<F>(w, &I, nullptr); };
    traces.push_back(gamma(I, regular).carrier());
    const Ideal<F> T(R, traces.back());
    rec.expect("trace_ideal_is_good", is_good(T), inst);
    rec.expect("annihilator_ideal_is_good", is_good(annihilator(I)), inst);
    if (traces.back() == I.carrier()) good.push_back(i);
  }
  const std::size_t limit = all_ideals ? ideals.size() : std::min<std::size_t>(ideals.size(), 12);
  for (std::size_t gi : good) {
    for (std::size_t a = 0; a < limit; ++a) {
      const auto c = ideal_colon(ideals[gi], ideals[a]);
      rec.expect("colon_of_good_is_good", is_good(c),
                 [&] { return instance_json<F>(w, &c, nullptr); });
    }
  }
  for (std::size_t a = 0; a < good.size(); ++a)
    for (std::size_t b = a + 1; b < good.size() && b < a + 8; ++b) {
      const auto s = ideal_sum(ideals[good[a]], ideals[good[b]]);
      rec.expect("sum_of_good_is_good", is_good(s),
                 [&] { return instance_json<F>(w, &s, nullptr); });
    }

  if constexpr (F::is_finite) {
    if (all_ideals) {
      constexpr std::size_t kIsoCap = 1u << 12;
      for (std::size_t a = 0; a < ideals.size(); ++a)
        for (std::size_t b = a + 1; b < ideals.size(); ++b) {
          if (ideals[a].dim() != ideals[b].dim() || ideals[a].is_zero()) continue;
          const auto A = ideal_module(ideals[a]);
          const auto B = ideal_module(ideals[b]);
          const HomModule<F> H(A, B);
          std::size_t count = 1;
          for (std::size_t j = 0; j < H.dim() && count <= kIsoCap; ++j) count *= F::characteristic;
          if (count > kIsoCap) continue;
          if (!find_isomorphism(A, B, kIsoCap).has_value()) continue;
          const auto inst = [&] { return instance_json<F>(w, &ideals[a], nullptr); };
          rec.expect("isomorphic_ideals_share_trace", traces[a] == traces[b], inst);
          const bool both_good = traces[a] == ideals[a].carrier() && traces[b] == ideals[b].carrier();
          if (both_good)
            rec.expect("isomorphic_good_ideals_coincide", ideals[a] == ideals[b], inst);
        }
    }
  }
}

inline void section2_semigroup(const SemigroupEntry& entry, std::uint64_t seed, Recorder& rec) {
  const auto S = NumericalSemigroup::make(entry.generators);
  const Json inst_json = {{"semigroup", entry.generators}};
  const auto inst = [&] { return inst_json; };
  const auto report = matlis_report(S, entry.max_power);

  rec.expect("stable_power_trace_is_lambda_inverse", report.stable_trace_verdict, inst);
  if (report.two_generator_verdict) {
    rec.expect("two_generator_nu_and_lambda_inverse", *report.two_generator_verdict, inst,
               {{"nu", report.nu}}, to_json(report.lambda_inverse));
  }
  rec.expect("maximal_ideal_good_iff_not_dvr", good_prime_check(S), inst);

  const ValueSet whole = whole_semigroup(S);
  std::vector<ValueSet> tests{whole, report.lambda_inverse};
  for (unsigned n = 1; n <= 3; ++n) tests.push_back(power_m(S, n));
  Rng rng(seed);
  const long span = S.conductor() + S.multiplicity();
  for (int t = 0; t < 4; ++t) {
    std::vector<long> gens;
    const std::size_t count = 1 + rng.below(3);
    while (gens.size() < count) {
      const long z = rng.between(0, span);
      if (S.contains(z)) gens.push_back(z);
    }
    tests.push_back(ideal(gens, S));
  }

  for (const auto& E : tests) {
    const Json e = to_json(E);
    const auto inst_E = [&] { return Json{{"semigroup", entry.generators}, {"ideal", e}}; };
    const auto T = trace_value(E, S);
    rec.expect("semigroup_trace_is_good", is_good(T, S), inst_E);
    for (long z : {-7L, -1L, 2L, 5L})
      rec.expect("trace_invariant_under_shift", trace_value(E.shifted(z), S) == T, inst_E);
    rec.expect("ideal_absorbs_semigroup", sumset(E, whole) == E, inst_E);
    rec.expect("double_inverse_contains_ideal", set_union(inverse(inverse(E, S), S), E) ==
                                                    inverse(inverse(E, S), S),
               inst_E);
    const bool unit = E == whole;
    rec.expect("ext1_vanishes_only_for_unit_ideal", (ext1_dim(E, S) == 0) == unit, inst_E);
    rec.expect("principal_ideal_trace_is_whole", trace_value(ideal({E.min()}, S), S) == whole,
               inst_E);
    for (const auto& F : tests) {
      const auto c = colon(E, F);
      rec.expect("colon_times_divisor_inside", set_union(sumset(c, F), E) == E, inst_E);
      if (is_good(E, S))
        rec.expect("semigroup_colon_of_good_is_good", is_good(colon_in(E, F, S), S), inst_E);
      if (is_good(E, S) && is_good(F, S))
        rec.expect("semigroup_union_of_good_is_good", is_good(set_union(E, F), S), inst_E);
    }
  }
}

// ---------------------------------------------------------------------------

template <class Body>
SuiteResult run_suite(const std::string& name, Body&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteResult r;
  r.suite = name;
  Recorder rec(r);
  body(rec);
  r.elapsed_ms = detail::elapsed_since(t0);
  return r;
}

inline SuiteResult suite_section1(const InstanceSpec& spec, Defect defect = Defect::None) {
  return run_suite("section1", [&](Recorder& rec) {
    detail::for_each_algebra(spec, [&]<Field F>(const AlgebraEntry& a, std::uint64_t index) {
      const auto w = detail::build_workload<F>(a, spec.verify, index);
      section1_workload(w, spec.verify, defect, rec);
    });
  });
}

inline SuiteResult suite_section2(const InstanceSpec& spec) {
  return run_suite("section2", [&](Recorder& rec) {
    detail::for_each_algebra(spec, [&]<Field F>(const AlgebraEntry& a, std::uint64_t index) {
      const auto w = detail::build_workload<F>(a, spec.verify, index);
      section2_algebra(w, spec.verify, rec);
    });
    std::uint64_t index = 0;
    for (const auto& s : spec.semigroups)
      section2_semigroup(s, substream(spec.verify.seed, 1'000'000 + index++), rec);
  });
}

inline SuiteResult suite_section3(const InstanceSpec& spec) {
  return run_suite("section3", [&](Recorder& rec) {
    detail::for_each_algebra(spec, [&]<Field F>(const AlgebraEntry& a, std::uint64_t index) {
      const auto w = detail::build_workload<F>(a, spec.verify, index);
      section3_workload(w, spec.verify, rec);
    });
  });
}

/// Runs the suites listed in spec.verify.sections.
inline std::vector<SuiteResult> run_verification(const InstanceSpec& spec,
                                                 Defect defect = Defect::None) {
  std::vector<SuiteResult> out;
  for (int s : spec.verify.sections) {
    if (s == 1) out.push_back(suite_section1(spec, defect));
    if (s == 2) out.push_back(suite_section2(spec));
    if (s == 3) out.push_back(suite_section3(spec));
  }
  return out;
}

}  // namespace tracelab
