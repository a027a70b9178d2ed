// tracelab: command-line front end for traces, cotraces, Ext¹/Tor₁,
// excellence and good ideals over small Artin algebras and numerical
// semigroups.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tracelab/tracelab.hpp"

namespace {

using namespace tracelab;

struct Options {
  std::string command;
  std::string ring;
  std::string module;
  std::string ideal;
  std::string gens;
  std::string spec;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> cap_dim;
  std::optional<std::size_t> cap_enum;
  std::optional<unsigned> max_power;
  std::size_t samples = 20;
  bool timing = false;
  bool inject_defect = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Everything the result depends on, hashed into the input fingerprint.
class Inputs {
 public:
  std::string load(const std::string& path) {
    std::string text = read_file(path);
    bytes_ += "file";
    bytes_ += '\0' + text + '\0';
    return text;
  }
  void note(const std::string& key, const std::string& value) {
    bytes_ += key + '\0' + value + '\0';
  }
  std::string fingerprint() const { return fnv1a_hex(bytes_); }

 private:
  std::string bytes_;
};

struct Ring {
  InstanceSpec spec;
  AlgebraEntry entry;
  std::string field;
};

Ring load_ring(const Options& o, Inputs& in) {
  if (o.ring.empty()) throw Error(ErrorKind::InvalidArgument, "--ring is required");
  Ring r{parse_spec(in.load(o.ring)), {}, {}};
  if (r.spec.algebras.empty())
    throw Error(ErrorKind::InvalidArgument, "'" + o.ring + "' has no [algebra] section");
  r.entry = r.spec.algebras.front();
  r.field = r.entry.fields.front();
  if (o.cap_dim) r.entry.dimension_cap = *o.cap_dim;
  return r;
}

template <Field F>
ModuleRep<F> load_module(const Options& o, const Ring& ring, const ArtinAlgebra<F>& R,
                         Inputs& in, Json& source) {
  const std::string& m = o.module;
  const bool is_path = !m.empty() && std::ifstream(m).good();
  if (!is_path) in.note("module", m);
  if (m.empty() || m == "R" || m == "regular") {
    source = "regular";
    return regular_module(R);
  }
  if (m == "k" || m == "residue") {
    source = "residue_field";
    return quotient(as_submodule(maximal_ideal(R), regular_module(R))).module;
  }
  if (m == "dual") {
    source = "dual_of_regular";
    return matlis_dual(regular_module(R));
  }
  auto build = [&](const ModuleEntry& e) {
    check_polynomials(ring.entry, {e}, {});
    source = {{"name", e.name}, {"rows", e.row_texts()}};
    return module_from_presentation<F>(R, e.row_texts(), e.generators);
  };
  for (const auto& e : ring.entry.modules)
    if (e.name == m) return build(e);
  const auto spec = parse_spec(in.load(m));
  if (!spec.modules.empty()) return build(spec.modules.front());
  if (!spec.algebras.empty() && !spec.algebras.front().modules.empty())
    return build(spec.algebras.front().modules.front());
  throw Error(ErrorKind::InvalidArgument, "'" + m + "' has no [module] section");
}

template <Field F>
Ideal<F> load_ideal(const Options& o, const Ring& ring, const ArtinAlgebra<F>& R) {
  if (o.ideal.empty()) throw Error(ErrorKind::InvalidArgument, "--ideal is required");
  for (const auto& e : ring.entry.ideals)
    if (e.name == o.ideal) return ideal_from_polynomials<F>(R, e.texts());
  std::vector<std::string> gens;
  for (const auto& g : detail::split_list(o.ideal, 1, 0)) {
    parse_polynomial(g.text, R.variables(), g.line, g.column);
    gens.push_back(g.text);
  }
  return ideal_from_polynomials<F>(R, gens);
}

template <Field F>
Json predicate_json(const PredicateResult<F>& p) {
  return {{"value", p.value},
          {"evidence", to_string(p.evidence)},
          {"ideals_checked", p.ideals_checked},
          {"witness", p.witness ? ideal_json(*p.witness) : Json(nullptr)}};
}

template <Field F>
Json algebra_command(const Options& o, const Ring& ring, Inputs& in) {
  PolynomialPresentation pres = ring.entry.presentation(ring.field);
  const auto R = build_algebra<F>(pres);
  const std::string& c = o.command;
  Json out = {{"algebra", algebra_json(R)}};
  const auto regular = regular_module(R);

  if (c == "algebra-info") {
    out["socle_dim"] = socle(regular).dim();
    out["loewy_length"] = loewy_length(R);
    out["embedding_dim"] = min_gens(maximal_ideal(R));
    out["qf"] = is_qf(R);
    return out;
  }

  Rng rng(substream(o.seed.value_or(1), 0));
  const std::size_t cap = o.cap_enum.value_or(kDefaultEnumerationCap);
  if (c == "qf") {
    out["qf"] = is_qf(R);
    out["socle_dim"] = socle(regular).dim();
    out["excellent"] = predicate_json(is_excellent(regular, sample_ideals(R, rng, o.samples), cap));
    return out;
  }

  if (c == "good") {
    const auto I = load_ideal<F>(o, ring, R);
    out["ideal"] = ideal_json(I);
    out["trace_in_R"] = to_json(gamma(I, regular).carrier());
    out["good"] = is_good(I);
    out["evidence"] = "exhaustive";
    return out;
  }

  Json source;
  const auto M = load_module<F>(o, ring, R, in, source);
  out["module"] = module_json(M);
  out["module_source"] = source;

  if (c == "dual") {
    const auto D = matlis_dual(M);
    out["dual"] = module_json(D);
    out["socle_dim"] = socle(M).dim();
    out["dual_min_generators"] = min_gens(D).count;
    return out;
  }
  if (c == "excellent") {
    auto sample = sample_ideals(R, rng, o.samples);
    if (!o.ideal.empty()) sample.push_back(load_ideal<F>(o, ring, R));
    out["excellent"] = predicate_json(is_excellent(M, sample, cap));
    out["coexcellent"] = predicate_json(is_coexcellent(M, sample, cap));
    return out;
  }

  const auto I = load_ideal<F>(o, ring, R);
  out["ideal"] = ideal_json(I);
  const bool cyclic = is_cyclic(I);
  out["cyclic_ideal"] = cyclic;
  out["evidence"] = "exhaustive";
  if (c == "trace") {
    const auto g = gamma(I, M);
    const auto IM = ideal_times_module(I, M);
    out["trace"] = to_json(g.carrier());
    out["ideal_times_module"] = to_json(IM.carrier());
    out["kill_annihilator"] = to_json(kill(M, annihilator(I)).carrier());
    out["I_excellent"] = g == IM;
  } else if (c == "cotrace") {
    const auto k = kappa(I, M);
    const auto MI = kill(M, I);
    out["cotrace"] = to_json(k.carrier());
    out["annihilator_times_module"] = to_json(ideal_times_module(annihilator(I), M).carrier());
    out["kill_ideal"] = to_json(MI.carrier());
    out["I_coexcellent"] = k == MI;
  } else if (c == "ext1") {
    const auto e = ext1(I, M);
    out["ext1_dim"] = e.dim();
    out["ext1_module"] = module_json(e);
    out["sigma_surjective"] = sigma(I, M).surjective;
    out["I_excellent"] = is_I_excellent(I, M);
    if (cyclic)
      out["cyclic_formula_dim"] = kill(M, annihilator(I)).dim() - ideal_times_module(I, M).dim();
  } else if (c == "tor1") {
    const auto t = tor1(M, I);
    out["tor1_dim"] = t.dim();
    out["tor1_module"] = module_json(t);
    out["beta_injective"] = beta(M, I).injective;
    out["I_coexcellent"] = is_I_coexcellent(I, M);
    if (cyclic)
      out["cyclic_formula_dim"] = kill(M, I).dim() - ideal_times_module(annihilator(I), M).dim();
  }
  return out;
}

Json semigroup_json(const NumericalSemigroup& S) {
  return {{"generators", S.generators()},
          {"minimal_generators", S.minimal_generators()},
          {"multiplicity", S.multiplicity()},
          {"conductor", S.conductor()},
          {"frobenius", S.frobenius()},
          {"gaps", S.gaps()}};
}

Json semigroup_command(const Options& o) {
  if (o.gens.empty()) throw Error(ErrorKind::InvalidArgument, "--gens is required");
  const auto S = NumericalSemigroup::make(parse_integer_list(o.gens));
  Json out = {{"semigroup", semigroup_json(S)}, {"evidence", "formula"}};
  if (o.command == "semigroup-report") {
    const auto r = matlis_report(S, o.max_power);
    Json table = Json::array();
    for (const auto& row : r.table) {
      table.push_back({{"n", row.n},
                       {"v", row.v},
                       {"power", to_json(row.power)},
                       {"trace", to_json(row.trace)},
                       {"trace_is_lambda_inverse", row.trace == r.lambda_inverse}});
    }
    out["v_m"] = r.v_m;
    out["nu"] = r.nu;
    out["lambda"] = to_json(r.lambda);
    out["lambda_inverse"] = to_json(r.lambda_inverse);
    out["table"] = std::move(table);
    out["stable_trace_verdict"] = r.stable_trace_verdict;
    out["two_generator_verdict"] =
        r.two_generator_verdict ? Json(*r.two_generator_verdict) : Json(nullptr);
    out["maximal_ideal_good"] = is_good(maximal_ideal(S), S);
    return out;
  }
  if (o.ideal.empty()) throw Error(ErrorKind::InvalidArgument, "--ideal is required");
  const auto E = ideal(parse_integer_list(o.ideal), S);
  out["ideal"] = to_json(E);
  out["trace"] = to_json(trace_value(E, S));
  out["inverse"] = to_json(inverse(E, S));
  out["self_colon"] = to_json(colon(E, E));
  out["good"] = is_good(E, S);
  out["ext1_dim"] = is_integral(E, S) ? Json(ext1_dim(E, S)) : Json(nullptr);
  return out;
}

Json verify_command(const Options& o, Inputs& in, bool& all_passed) {
  if (o.spec.empty()) throw Error(ErrorKind::InvalidArgument, "--spec is required");
  auto spec = parse_spec(in.load(o.spec));
  if (o.seed) spec.verify.seed = *o.seed;
  if (o.cap_enum) spec.verify.cap_enum = *o.cap_enum;
  if (o.cap_dim)
    for (auto& a : spec.algebras) a.dimension_cap = *o.cap_dim;
  const auto results =
      run_verification(spec, o.inject_defect ? Defect::DropHomBasisVector : Defect::None);
  Json suites = Json::array();
  all_passed = true;
  for (const auto& r : results) {
    suites.push_back(r.to_json(o.timing));
    all_passed = all_passed && r.passed();
  }
  return {{"seed", spec.verify.seed},
          {"passed", all_passed},
          {"suites", std::move(suites)},
          {"evidence", {{"F_p", "exhaustive"}, {"Q", "sampled"}, {"semigroup", "formula"}}}};
}

/// Aligned "key  value" lines; nested objects are flattened with dots.
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

std::string render_text(const Json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Traces, cotraces and excellence over Artin algebras and numerical semigroups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  auto add_common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    s->add_flag("--timing", o.timing, "Include wall-clock timings (non-canonical)");
  };
  auto add_ring = [&](CLI::App* s, bool module, bool ideal) {
    s->add_option("--ring", o.ring, "Ring file")->required();
    s->add_option("--cap-dim", o.cap_dim, "Largest admissible dim R");
    if (module)
      s->add_option("--module", o.module, "Module file, module name, or R | k | dual (default R)");
    if (ideal) s->add_option("--ideal", o.ideal, "Ideal generators (comma list) or ideal name");
  };
  auto add_sampling = [&](CLI::App* s) {
    s->add_option("--seed", o.seed, "Seed for sampled ideals over Q");
    s->add_option("--samples", o.samples, "Random ideals sampled over Q");
    s->add_option("--cap-enum", o.cap_enum, "Largest admissible enumeration");
  };

  std::vector<CLI::App*> subs;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    add_common(s);
    subs.push_back(s);
    return s;
  };
  add_ring(sub("algebra-info", "Dimension, basis and socle of R"), false, false);
  add_ring(sub("trace", "Trace of I in M"), true, true);
  add_ring(sub("cotrace", "Cotrace of I in M"), true, true);
  add_ring(sub("ext1", "Ext^1(R/I, M)"), true, true);
  add_ring(sub("tor1", "Tor_1(M, R/I)"), true, true);
  add_ring(sub("dual", "Matlis dual of M"), true, false);
  {
    auto* s = sub("excellent", "Excellence and coexcellence of M");
    add_ring(s, true, true);
    add_sampling(s);
  }
  add_ring(sub("good", "Whether I is its own trace in R"), false, true);
  {
    auto* s = sub("qf", "Simple socle versus excellence of R");
    add_ring(s, false, false);
    add_sampling(s);
  }
  {
    auto* s = sub("semigroup-report", "Powers of m, their traces, nu and Lambda");
    s->add_option("--gens", o.gens, "Semigroup generators, e.g. 3,4")->required();
    s->add_option("--max-power", o.max_power, "Largest power of m (default nu + 4)");
  }
  {
    auto* s = sub("semigroup-good", "Goodness of a semigroup ideal");
    s->add_option("--gens", o.gens, "Semigroup generators")->required();
    s->add_option("--ideal", o.ideal, "Ideal generators, e.g. 3,4")->required();
  }
  {
    auto* s = sub("verify", "Run the property suites on a spec file");
    s->add_option("--spec", o.spec, "Spec file")->required();
    s->add_option("--seed", o.seed, "Override the spec seed");
    s->add_option("--cap-enum", o.cap_enum, "Largest admissible enumeration");
    s->add_option("--cap-dim", o.cap_dim, "Largest admissible dim R");
    s->add_flag("--inject-defect", o.inject_defect, "Drop a Hom basis vector in the trace");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  for (auto* s : subs)
    if (s->parsed()) o.command = s->get_name();

  const auto t0 = std::chrono::steady_clock::now();
  Inputs in;
  Json args = Json::object();
  for (auto* opt : app.get_subcommand(o.command)->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const auto name = opt->get_name(false, true);
    if (name == "--timing" || name == "--format") continue;
    args[name] = opt->as<std::string>();
    // Files are fingerprinted by content, not by path.
    if (name != "--ring" && name != "--spec" && name != "--module") in.note(name, opt->as<std::string>());
  }

  bool passed = true;
  Json result;
  try {
    const auto& c = o.command;
    if (c == "semigroup-report" || c == "semigroup-good") {
      result = semigroup_command(o);
    } else if (c == "verify") {
      result = verify_command(o, in, passed);
    } else {
      const Ring ring = load_ring(o, in);
      result = dispatch_field(ring.field, [&]<Field F>() { return algebra_command<F>(o, ring, in); });
    }
  } catch (const Error& e) {
    Json err = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (e.line()) err["line"] = e.line();
    if (e.column()) err["column"] = e.column();
    std::cerr << err.dump() << "\n";
    return 2;
  }

  Json report = {{"command", {{"name", o.command}, {"args", args}}},
                 {"input_fingerprint", in.fingerprint()},
                 {"result", std::move(result)},
                 {"tool", "tracelab"},
                 {"version", std::string(kVersion)}};
  if (o.timing) report["elapsed_ms"] = detail::elapsed_since(t0);
  std::cout << (o.format == "text" ? render_text(report) : canonical_dump(report));
  return passed ? 0 : 1;
}
