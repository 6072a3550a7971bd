#pragma once

// Command-line front end. Not part of the umbrella header: it pulls in
// CLI11 and nlohmann::json from vendor/.
//
//   unproj construct (--generic | --family ID) [--field F] [--seed N] [--out FILE]
//   unproj verify    (--generic | --family ID|all | --ideal FILE) [--checks a,b,...]
//   unproj hilbert   (--generic | --family ID | --ideal FILE)
//   unproj gb        (--generic | --family ID | --ideal FILE) [--order lex|grevlex]
//   unproj dim       (--generic | --family ID | --ideal FILE) [--order lex|grevlex]
//
// Exit status: 0 all checks pass, 1 some check failed, 2 usage or input error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "unproj/unproj.hpp"

namespace unproj::cli {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::string family;  ///< "29376", "9176", "24198", "all", "generic" or empty
  std::string ideal_path;
  std::uint64_t seed = 0;
  std::string field = "Fp:32003";
  std::vector<std::string> checks;
  std::string out_path;
  std::string order = "grevlex";
  int verbosity = 0;
};

template <class Fn>
decltype(auto) with_field(const std::string& name, Fn&& fn) {
  if (name == "QQ") return fn(RationalField{});
  if (name.rfind("Fp:", 0) == 0) {
    const std::string digits = name.substr(3);
    if (digits.empty() || digits.size() > 10 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw UsageError("bad field '" + name + "'");
    auto p = std::stoull(digits);
    if (p >= (1ull << 31)) throw UsageError("bad field '" + name + "'");
    try {
      return fn(PrimeField(static_cast<std::uint32_t>(p)));
    } catch (const FieldError& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown field '" + name + "' (expected QQ or Fp:<p>)");
}

// ---- JSON encoding

template <CoefficientField F>
json ring_to_json(const PolynomialRing<F>& ring) {
  json vars = json::array();
  for (const auto& v : ring.variables()) vars.push_back({{"name", v.name}, {"weight", v.weight}});
  return {{"vars", vars}, {"field", ring.field().name()}};
}

template <CoefficientField F>
json polys_to_json(const std::vector<Polynomial<F>>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(format_poly(p));
  return out;
}

template <CoefficientField F>
json ideal_to_json(const Ideal<F>& I) {
  return {{"ring", ring_to_json(*I.ring())}, {"gens", polys_to_json(I.generators())}};
}

inline json hilbert_to_json(const IntPoly& numerator, const std::vector<int>& weights) {
  json num = json::array();
  const auto& c = numerator.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) num.push_back({c[i], static_cast<int>(i)});
  return {{"numerator", num}, {"denominator_weights", weights}};
}

inline json hilbert_to_json(const HilbertSeries& h) { return hilbert_to_json(h.numerator, h.denominator_weights); }

template <CoefficientField F>
RingPtr<F> ring_from_json(const json& j, const F& field) {
  std::vector<Variable> vars;
  for (const auto& v : j.at("vars")) vars.push_back({v.at("name").get<std::string>(), v.at("weight").get<int>()});
  return PolynomialRing<F>::make(field, std::move(vars));
}

template <CoefficientField F>
Ideal<F> ideal_from_json(const json& j, const F& field) {
  auto ring = ring_from_json(j.at("ring"), field);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : j.at("gens")) gens.push_back(parse_poly(g.get<std::string>(), ring));
  return Ideal<F>(ring, std::move(gens));
}

template <CoefficientField F>
json instance_provenance(const FamilyInstance<F>& inst) {
  const auto& k = inst.ambient()->field();
  json c = json::object();
  for (const auto& [name, v] : inst.c_values) c[name] = k.to_string(v);
  json l = json::array();
  for (const auto& v : inst.l_values) l.push_back(k.to_string(v));
  return {{"c", c}, {"l", l}};
}

// ---- reports

struct Report {
  json checks = json::array();
  bool pass = true;

  void add(std::string name, json expected, json computed, bool ok) {
    checks.push_back({{"name", std::move(name)}, {"expected", std::move(expected)},
                      {"computed", std::move(computed)}, {"pass", ok}});
    pass = pass && ok;
  }
  void append(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(c);
    pass = pass && other.pass;
  }
};

inline const std::vector<std::string>& family_check_names() {
  static const std::vector<std::string> names{"betti", "codim", "mingens", "hilbert", "palindromic", "strata", "twist"};
  return names;
}

inline const std::vector<std::string>& generic_check_names() {
  static const std::vector<std::string> names{"codim", "mingens", "phi", "ast"};
  return names;
}

/// Requested checks in canonical order; all of `valid` when none are requested.
inline std::vector<std::string> select_checks(const std::vector<std::string>& requested,
                                              const std::vector<std::string>& valid) {
  if (requested.empty()) return valid;
  for (const auto& r : requested)
    if (std::find(valid.begin(), valid.end(), r) == valid.end()) throw UsageError("unknown check '" + r + "'");
  std::vector<std::string> out;
  for (const auto& v : valid)
    if (std::find(requested.begin(), requested.end(), v) != requested.end()) out.push_back(v);
  return out;
}

inline bool wants(const std::vector<std::string>& checks, std::string_view name) {
  return std::find(checks.begin(), checks.end(), name) != checks.end();
}

/// `twist` is the twist of the base complete intersection when it is at hand,
/// otherwise it is recomputed from the reference weights and degrees.
template <CoefficientField F>
Report family_report(const FanoFamilySpec& spec, const Ideal<F>& Q, const std::vector<std::string>& checks,
                     std::optional<int> twist) {
  Report rep;
  const std::string prefix = std::to_string(spec.id) + "/";

  // pure arithmetic on the reference tables, ahead of any Groebner work
  if (wants(checks, "betti")) {
    auto bc = betti_consistency(spec.id);
    rep.add(prefix + "betti", {{"alt_sum_matches", true}, {"canonical_twist_is_minus_1", true}, {"self_dual", true}},
            {{"alt_sum_matches", bc.alt_sum_matches},
             {"canonical_twist_is_minus_1", bc.canonical_twist_is_minus_1},
             {"self_dual", bc.self_dual}},
            bc.ok());
  }

  if (wants(checks, "codim") || wants(checks, "mingens") || wants(checks, "hilbert") || wants(checks, "palindromic")) {
    auto r = verify_family(spec, Q);
    if (wants(checks, "codim")) rep.add(prefix + "codim", 6, r.codim, r.codim == 6);
    if (wants(checks, "mingens")) rep.add(prefix + "mingens", 20, r.min_gens, r.min_gens == 20);
    if (wants(checks, "hilbert"))
      rep.add(prefix + "hilbert", hilbert_to_json(spec.numerator, spec.denominator_weights), hilbert_to_json(r.hilbert),
              r.hilbert_match);
    if (wants(checks, "palindromic")) rep.add(prefix + "palindromic", true, r.palindromic, r.palindromic);
  }

  if (wants(checks, "strata")) {
    auto s = strata_check(spec, Q);
    for (std::size_t i = 0; i < s.strata.size(); ++i) {
      const auto& st = spec.strata[i];
      const auto& r = s.strata[i];
      json expected = json::object(), computed = {{"dimension", r.dimension}, {"degree", r.degree}};
      if (st.contains_point) expected["contains_point"] = *st.contains_point;
      if (st.degree) expected["degree"] = *st.degree;
      if (r.contains_point) computed["contains_point"] = *r.contains_point;
      rep.add(prefix + "strata/" + st.name, expected, computed, r.pass);
    }
    rep.add(prefix + "strata/total", spec.singular_points, s.total_points, s.total_points == spec.singular_points);
  }

  if (wants(checks, "twist")) {
    int t = 0;
    if (twist) {
      t = *twist;
    } else {
      std::vector<int> w;
      for (const auto& [name, weight] : spec.source_weights)
        if (name[0] != 'T') w.push_back(weight);
      t = ci_canonical_twist(w, spec.ci_degrees);
    }
    rep.add(prefix + "twist", spec.ci_twist, t, t == spec.ci_twist);
  }
  return rep;
}

template <CoefficientField F>
Report generic_report(const Ideal<F>& iun, const FourIntersectionData<F>* data, const std::vector<std::string>& checks) {
  Report rep;
  if (wants(checks, "codim")) {
    int c = codimension(iun);
    rep.add("generic/codim", 6, c, c == 6);
  }
  if (wants(checks, "mingens")) {
    auto n = minimal_generators(iun).size();
    rep.add("generic/mingens", 20, n, n == 20);
  }
  if (!data) return rep;
  if (wants(checks, "phi")) {
    for (int t = 1; t <= 4; ++t) {
      bool ok = verify_phi(*data, t).ok();
      rep.add("generic/phi/" + std::to_string(t), true, ok, ok);
    }
  }
  if (wants(checks, "ast")) {
    const auto& r = data->ring;
    auto A12 = compute_Ast(*data, 1, 2);
    auto golden = parse_poly("x2^2", r) * parse_poly("c3*c4 - c1*c6", r) * parse_poly("-c2*c4 + c1*c5", r);
    bool up_to_sign = A12 == golden || A12 == -golden;
    rep.add("generic/ast/A12", format_poly(golden), format_poly(A12), up_to_sign);
    for (int s = 1; s <= 4; ++s)
      for (int t = 1; t <= 4; ++t) {
        if (s == t) continue;
        auto d = weighted_degree(compute_Ast(*data, s, t));
        bool ok = d == WeightedDegree::homogeneous(6);
        rep.add("generic/ast/degree/" + std::to_string(s) + std::to_string(t), 6, ok ? json(6) : json(nullptr), ok);
      }
  }
  return rep;
}

// ---- driver

inline int family_id(const std::string& s) {
  for (const auto& spec : all_family_specs())
    if (std::to_string(spec.id) == s) return spec.id;
  throw UsageError("unknown family " + s);
}

/// Family ids named by `--family`, in ascending numeric order for "all".
inline std::vector<int> family_ids(const std::string& s) {
  if (s != "all") return {family_id(s)};
  std::vector<int> ids;
  for (const auto& spec : all_family_specs()) ids.push_back(spec.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

inline std::size_t thread_cap() {
  const char* env = std::getenv("UNPROJ_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) throw UsageError(std::string("bad UNPROJ_THREADS '") + env + "'");
  return static_cast<std::size_t>(v);
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

class Runner {
 public:
  Runner(RunConfig cfg, std::ostream& out, std::ostream& err) : cfg_(std::move(cfg)), out_(out), err_(err) {}

  int run() {
    return with_field(cfg_.field, [&](auto field) { return dispatch(field); });
  }

 private:
  template <CoefficientField F>
  int dispatch(const F& field) {
    const auto& c = cfg_.command;
    if (c == "construct") return construct(field);
    if (c == "verify") return verify(field);
    if (c == "hilbert" || c == "gb" || c == "dim") return standalone(field);
    throw UsageError("unknown command '" + c + "'");
  }

  void log(const std::string& msg) const {
    if (cfg_.verbosity > 0) err_ << "unproj: " << msg << '\n';
  }

  void require_one_source(bool allow_all) const {
    int n = !cfg_.family.empty() + !cfg_.ideal_path.empty();
    if (n != 1) throw UsageError("give exactly one of --generic, --family, --ideal");
    if (!allow_all && cfg_.family == "all") throw UsageError(cfg_.command + " needs a single family");
  }

  void emit(const json& j) const {
    std::string text = j.dump(2) + "\n";
    if (cfg_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(cfg_.out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + cfg_.out_path);
    f << text;
  }

  json provenance(const std::string& field, json assignments) const {
    return {{"seed", cfg_.seed}, {"field", field}, {"assignments", std::move(assignments)}, {"version", kVersion}};
  }

  void summarize(const Report& rep) const {
    if (cfg_.out_path.empty()) return;
    for (const auto& c : rep.checks)
      out_ << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << '\n';
    out_ << (rep.pass ? "all checks passed" : "some checks FAILED") << " (report in " << cfg_.out_path << ")\n";
  }

  /// The ideal named by --generic / --family / --ideal.
  template <CoefficientField F>
  Ideal<F> source_ideal(const F& field) {
    require_one_source(false);
    if (!cfg_.ideal_path.empty()) {
      auto j = read_json_file(cfg_.ideal_path);
      if (j.at("ring").at("field").get<std::string>() != field.name())
        throw UsageError("ideal file is over " + j["ring"]["field"].get<std::string>() + ", not " + field.name());
      return ideal_from_json(j, field);
    }
    if (cfg_.family == "generic") return generic_unprojection(field).ideal;
    return build_family(family_id(cfg_.family), cfg_.seed, field).Q;
  }

  template <CoefficientField F>
  int construct(const F& field) {
    if (!cfg_.ideal_path.empty()) throw UsageError("construct takes --generic or --family");
    require_one_source(false);
    json j;
    if (cfg_.family == "generic") {
      log("building the generic unprojection ideal");
      auto iun = generic_unprojection(field);
      j = ideal_to_json(iun.ideal);
      j["labels"] = iun.labels;
      j["family"] = "generic";
      j["provenance"] = provenance(field.name(), json::object());
    } else {
      int id = family_id(cfg_.family);
      log("building family " + std::to_string(id));
      auto inst = build_family(id, cfg_.seed, field);
      j = ideal_to_json(inst.Q);
      j["family"] = id;
      j["provenance"] = provenance(field.name(), {{std::to_string(id), instance_provenance(inst)}});
    }
    emit(j);
    return 0;
  }

  template <CoefficientField F>
  int verify(const F& field) {
    require_one_source(true);
    Report rep;
    json assignments = json::object();

    if (!cfg_.ideal_path.empty()) {
      auto j = read_json_file(cfg_.ideal_path);
      if (!j.contains("family")) throw UsageError("ideal file has no family tag; use hilbert, gb or dim");
      if (j.at("ring").at("field").get<std::string>() != field.name())
        throw UsageError("ideal file is over " + j["ring"]["field"].get<std::string>() + ", not " + field.name());
      auto Q = ideal_from_json(j, field);
      if (j.contains("provenance")) {
        const auto& p = j["provenance"];
        if (p.contains("seed") && p["seed"].get<std::uint64_t>() != cfg_.seed)
          throw UsageError("ideal file was built with seed " + p["seed"].dump() + ", not " + std::to_string(cfg_.seed));
        if (p.contains("assignments")) assignments = p["assignments"];
      }
      if (j["family"] == "generic") {
        rep = generic_report<F>(Q, nullptr, select_checks(cfg_.checks, generic_check_names()));
      } else {
        const auto& spec = family_spec(family_id(j["family"].dump()));
        rep = family_report(spec, Q, select_checks(cfg_.checks, family_check_names()), std::nullopt);
      }
    } else if (cfg_.family == "generic") {
      auto checks = select_checks(cfg_.checks, generic_check_names());
      auto data = build_four_intersection<F>({}, field);
      rep = generic_report(build_Iun(data).ideal, &data, checks);
    } else {
      auto ids = family_ids(cfg_.family);
      auto checks = select_checks(cfg_.checks, family_check_names());
      const auto generic = generic_unprojection(field);
      struct Outcome {
        Report report;
        json assignment;
      };
      auto run_one = [&](int id) {
        log("verifying family " + std::to_string(id));
        auto inst = build_family(id, cfg_.seed, generic);
        std::optional<int> twist;
        if (wants(checks, "twist")) twist = ci_canonical_twist(inst.specialized.I);
        return Outcome{family_report(*inst.spec, inst.Q, checks, twist), instance_provenance(inst)};
      };
      std::vector<Outcome> outcomes;
      const std::size_t cap = thread_cap();
      for (std::size_t i = 0; i < ids.size(); i += cap) {
        std::vector<std::future<Outcome>> batch;
        for (std::size_t k = i; k < std::min(ids.size(), i + cap); ++k)
          batch.push_back(std::async(cap > 1 ? std::launch::async : std::launch::deferred, run_one, ids[k]));
        for (auto& f : batch) outcomes.push_back(f.get());
      }
      for (std::size_t i = 0; i < ids.size(); ++i) {
        rep.append(outcomes[i].report);
        assignments[std::to_string(ids[i])] = outcomes[i].assignment;
      }
    }

    json j{{"checks", rep.checks}, {"pass", rep.pass}, {"provenance", provenance(field.name(), assignments)}};
    emit(j);
    summarize(rep);
    return rep.pass ? 0 : 1;
  }

  template <CoefficientField F>
  int standalone(const F& field) {
    auto I = source_ideal(field);
    auto order = parse_order(cfg_.order);
    json j;
    if (cfg_.command == "hilbert") {
      j = hilbert_to_json(hilbert_series(I));
    } else if (cfg_.command == "gb") {
      const auto& gb = I.groebner_basis(order);
      j = {{"ring", ring_to_json(*gb.ring())}, {"order", std::string(to_string(order))},
           {"gens", polys_to_json(gb.elements())}};
    } else {
      int d = dimension(I, order);
      j = {{"dimension", d}, {"codimension", static_cast<int>(I.ring()->size()) - d}};
    }
    emit(j);
    return 0;
  }

  RunConfig cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Four-intersection unprojection: construction and verification"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1, 1);

  RunConfig cfg;
  std::string family;
  bool generic = false;
  std::string checks;

  auto add_common = [&](CLI::App* sub, bool source_all) {
    sub->add_option("--family", family, source_all ? "family id, or all" : "family id");
    sub->add_flag("--generic", generic, "the generic I_un with symbolic c's");
    sub->add_option("--seed", cfg.seed, "seed for the general coefficients")->capture_default_str();
    sub->add_option("--field", cfg.field, "QQ or Fp:<p>")->capture_default_str();
    sub->add_option("--out", cfg.out_path, "write JSON here instead of stdout");
    sub->add_flag("-v,--verbose", cfg.verbosity, "progress on stderr");
  };

  auto* construct = app.add_subcommand("construct", "write an ideal as JSON");
  add_common(construct, false);
  auto* verify = app.add_subcommand("verify", "run checks and write a report");
  add_common(verify, true);
  verify->add_option("--ideal", cfg.ideal_path, "ideal file written by construct");
  verify->add_option("--checks", checks, "comma-separated subset of checks");
  for (const char* name : {"hilbert", "gb", "dim"}) {
    auto* sub = app.add_subcommand(name, std::string(name) + " of an ideal");
    add_common(sub, false);
    sub->add_option("--ideal", cfg.ideal_path, "ideal JSON file");
    sub->add_option("--order", cfg.order, "lex or grevlex")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (generic && !family.empty()) throw UsageError("--generic and --family are exclusive");
    cfg.family = generic ? "generic" : family;
    std::stringstream ss(checks);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) cfg.checks.push_back(item);
    return Runner(std::move(cfg), out, err).run();
  } catch (const UsageError& e) {
    err << "unproj: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "unproj: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "unproj: malformed input: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "unproj: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace unproj::cli
