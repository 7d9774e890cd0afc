#pragma once

// Command-line front end: single computations, grid suites, JSON reports.
// run_command() takes argv without the program name and returns the exit
// code: 0 all checks pass, 1 some check fails (or a probe disagrees with the
// predicted simplicity), 2 usage, parse or I/O error.

#include <blocksuper/algebra.hpp>
#include <blocksuper/closure.hpp>
#include <blocksuper/expr.hpp>
#include <blocksuper/invariants.hpp>
#include <blocksuper/modules.hpp>
#include <blocksuper/rank2.hpp>
#include <blocksuper/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace blocksuper {

inline constexpr const char* kToolVersion = "blocksuper 0.1.0";

/// The shipped default grids; config/default_suites.json holds the same text.
inline const char* default_config_text() {
  return R"({
  "jacobi": {
    "sectors": ["RB", "NSB"],
    "q": ["-1", "2", "1/2", "-3/5"],
    "max_twice_index": 8,
    "max_grade": 3
  },
  "module": {
    "sectors": ["RB", "NSB"],
    "q": ["-1", "2", "1/2"],
    "a": ["0", "1", "-3/2"],
    "b": ["0", "5"],
    "lambda": ["1", "3", "4"],
    "max_twice_index": 6,
    "max_grade": 2,
    "max_degree": 6,
    "witt_max_index": 3,
    "lemma32_max_m": 2,
    "lemma32_max_grade": 1,
    "lemma32_max_r": 3,
    "lemma32_max_degree": 4,
    "lemma52_max_twice_index": 7,
    "lemma52_max_grade": 2,
    "restriction_max_mode": 3
  },
  "embeddings": {
    "svir_q": ["2", "-3"],
    "svir_window": 3,
    "hv_window": 3,
    "tau_q": ["-1", "2", "1/2"],
    "tau_max_twice_index": 6,
    "tau_max_grade": 2
  },
  "phi": {
    "lambda": ["4", "9/4"],
    "sigma": ["2", "3/2"],
    "q": ["-1", "2"],
    "a": ["0", "1"],
    "b": ["0", "3"],
    "window": 2,
    "degree_cap": 4,
    "max_grade": 2
  },
  "probe": {
    "families": ["R", "L"],
    "q": ["-1", "2", "1/2"],
    "a": ["0", "1"],
    "b": ["0", "1"],
    "lambda": ["1", "3"],
    "max_mode": 2,
    "max_grade": 1,
    "max_degree": 4
  },
  "invariants": {
    "families": ["R", "L"],
    "q": ["-1", "2", "1/2"],
    "a": ["0", "1", "-3/2"],
    "b": ["0", "5"],
    "lambda": ["1", "3", "4"]
  }
}
)";
}

/// Test seam: lets a test swap in a corrupted bracket table.
struct CliHooks {
  BracketRule rule = block_bracket_rule;
};

namespace cli {

using json = nlohmann::ordered_json;

struct Record {
  Record() = default;
  Record(std::string id_, json params_, bool pass_) : id(std::move(id_)), params(std::move(params_)), pass(pass_) {}

  std::string id;
  json params = json::object();
  bool pass = true;
  std::optional<std::string> defect;
  json certificate = nullptr;
};

class Report {
 public:
  void add(Record r) { records_.push_back(std::move(r)); }

  void add(const std::string& id, json params, const CheckReport& check) {
    Record r{id, std::move(params), check.passed()};
    if (!check.passed()) {
      std::string text = std::to_string(check.failures) + " of " + std::to_string(check.cases) + " cases failed";
      for (const auto& d : check.defects) text += "; " + d;
      r.defect = text;
    }
    add(std::move(r));
  }

  std::size_t passes() const {
    return static_cast<std::size_t>(std::count_if(records_.begin(), records_.end(), [](const Record& r) { return r.pass; }));
  }
  std::size_t failures() const { return records_.size() - passes(); }

  json to_json(const json& config) const {
    json doc;
    doc["version"] = kToolVersion;
    doc["config"] = config;
    doc["records"] = json::array();
    for (const auto& r : records_) {
      json rec;
      rec["id"] = r.id;
      rec["params"] = r.params;
      rec["status"] = r.pass ? "pass" : "fail";
      rec["defect"] = r.defect ? json(*r.defect) : json(nullptr);
      rec["certificate"] = r.certificate;
      doc["records"].push_back(std::move(rec));
    }
    doc["summary"] = {{"pass", passes()}, {"fail", failures()}};
    return doc;
  }

  void print(std::ostream& out) const {
    for (const auto& r : records_) {
      out << (r.pass ? "PASS " : "FAIL ") << r.id;
      if (!r.params.empty()) out << ' ' << r.params.dump();
      if (r.defect) out << ": " << *r.defect;
      out << '\n';
    }
    out << "summary: " << passes() << " pass, " << failures() << " fail\n";
  }

 private:
  std::vector<Record> records_;
};

// Usage-level failure inside a subcommand (bad config value and the like).
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Scalar scalar_field(const std::string& text, const std::string& what) {
  try {
    return parse_scalar(text);
  } catch (const parse_error& e) {
    throw config_error(what + ": " + e.what());
  }
}

inline std::vector<Scalar> scalar_list(const json& section, const std::string& key) {
  if (!section.contains(key) || !section[key].is_array()) throw config_error("config field '" + key + "' must be a list");
  std::vector<Scalar> out;
  for (const auto& v : section[key]) {
    if (!v.is_string()) throw config_error("config field '" + key + "' must hold scalar strings");
    out.push_back(scalar_field(v.get<std::string>(), key));
  }
  return out;
}

inline std::vector<Scalar> nonzero_list(const json& section, const std::string& key) {
  auto out = scalar_list(section, key);
  for (const auto& s : out)
    if (s.is_zero()) throw config_error("config field '" + key + "' must not contain 0");
  return out;
}

inline long int_field(const json& section, const std::string& key) {
  if (!section.contains(key) || !section[key].is_number_integer() || section[key].get<long>() < 0)
    throw config_error("config field '" + key + "' must be a non-negative integer");
  return section[key].get<long>();
}

inline std::vector<std::string> string_list(const json& section, const std::string& key) {
  if (!section.contains(key) || !section[key].is_array()) throw config_error("config field '" + key + "' must be a list");
  std::vector<std::string> out;
  for (const auto& v : section[key]) {
    if (!v.is_string()) throw config_error("config field '" + key + "' must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

inline Sector sector_from(const std::string& s) {
  if (s == "RB") return Sector::RB;
  if (s == "NSB") return Sector::NSB;
  throw config_error("unknown sector '" + s + "' (expected RB or NSB)");
}

inline Sector family_sector(const std::string& f) {
  if (f == "R") return Sector::RB;
  if (f == "L") return Sector::NSB;
  throw config_error("unknown family '" + f + "' (expected R or L)");
}

/// Defaults overlaid with the user's config file, section by section.
inline json load_config(const std::optional<std::string>& path) {
  json cfg = json::parse(default_config_text());
  if (!path) return cfg;
  std::ifstream in(*path);
  if (!in) throw config_error("cannot read config file " + *path);
  json user;
  try {
    user = json::parse(in);
  } catch (const json::parse_error& e) {
    throw config_error("config file " + *path + " is not valid JSON: " + e.what());
  }
  if (!user.is_object()) throw config_error("config file must hold a JSON object");
  for (auto it = user.begin(); it != user.end(); ++it) {
    if (!cfg.contains(it.key())) throw config_error("unknown config section '" + it.key() + "'");
    if (!it.value().is_object()) throw config_error("config section '" + it.key() + "' must be an object");
    for (auto f = it.value().begin(); f != it.value().end(); ++f) cfg[it.key()][f.key()] = f.value();
  }
  return cfg;
}

inline json point_params(const Scalar& q, const Scalar& lambda, const Scalar& a, const Scalar& b) {
  json p = {{"q", format_scalar(q)}, {"lambda", format_scalar(lambda)}, {"a", format_scalar(a)}};
  p["b"] = q == Scalar(-1) ? json(format_scalar(b)) : json(format_scalar(b) + " (inert)");
  return p;
}

struct GridPoint {
  Scalar q, lambda, a, b;
};

inline std::vector<GridPoint> grid(const json& section) {
  std::vector<GridPoint> out;
  const auto qs = nonzero_list(section, "q");
  const auto ls = nonzero_list(section, "lambda");
  const auto as = scalar_list(section, "a");
  const auto bs = scalar_list(section, "b");
  for (const auto& q : qs)
    for (const auto& l : ls)
      for (const auto& a : as)
        for (const auto& b : bs) out.push_back({q, l, a, b});
  return out;
}

// ---------------------------------------------------------------------------
// Suites

inline void jacobi_suite_cmd(const json& s, const CliHooks& hooks, Report& rep) {
  const long tw = int_field(s, "max_twice_index");
  const long gr = int_field(s, "max_grade");
  for (const auto& sec : string_list(s, "sectors"))
    for (const auto& q : nonzero_list(s, "q")) {
      const StructureParams p(q, sector_from(sec));
      json params = {{"sector", sec}, {"q", format_scalar(q)}};
      rep.add("jacobi", params, jacobi_suite(p, tw, gr, hooks.rule));
      rep.add("skew-symmetry", params, skew_symmetry_suite(p, tw, gr, hooks.rule));
    }
}

inline void module_suite_cmd(const json& s, const CliHooks& hooks, Report& rep) {
  const long tw = int_field(s, "max_twice_index");
  const long gr = int_field(s, "max_grade");
  const int deg = static_cast<int>(int_field(s, "max_degree"));
  const auto pts = grid(s);
  for (const auto& sec : string_list(s, "sectors")) {
    const Sector sector = sector_from(sec);
    const auto keys = keys_in_window(sector, tw, gr);
    for (const auto& pt : pts) {
      const ModuleParams mp(sector, pt.lambda, pt.a, pt.b, pt.q);
      if (sector == Sector::RB)
        rep.add("module-axioms/R", point_params(pt.q, pt.lambda, pt.a, pt.b),
                module_axiom_suite(OmegaR(mp, hooks.rule), keys, monomial_vectors<SuperVectorR>(deg)));
      else
        rep.add("module-axioms/L", point_params(pt.q, pt.lambda, pt.a, pt.b),
                module_axiom_suite(OmegaL(mp, hooks.rule), keys, monomial_vectors<SuperVectorL>(deg)));
    }
  }
  // Witt and Heisenberg-Virasoro modules over the (lambda, a[, b]) part of the grid.
  const long wmax = int_field(s, "witt_max_index");
  for (const auto& l : nonzero_list(s, "lambda"))
    for (const auto& a : scalar_list(s, "a")) {
      json params = {{"lambda", format_scalar(l)}, {"a", format_scalar(a)}};
      rep.add("module-axioms/W", params, module_axiom_suite(WittModule(l, a), witt_keys(wmax), poly_monomials(deg)));
      for (const auto& b : scalar_list(s, "b")) {
        params["b"] = format_scalar(b);
        rep.add("module-axioms/H", params, module_axiom_suite(HvModule(l, a, b), hv_keys(wmax), poly_monomials(deg)));
      }
    }
  for (const auto& pt : pts) {
    const json params = point_params(pt.q, pt.lambda, pt.a, pt.b);
    const ModuleParams r(Sector::RB, pt.lambda, pt.a, pt.b, pt.q);
    const ModuleParams l(Sector::NSB, pt.lambda, pt.a, pt.b, pt.q);
    rep.add("lemma32", params,
            lemma32_suite(r, int_field(s, "lemma32_max_m"), int_field(s, "lemma32_max_grade"),
                          int_field(s, "lemma32_max_r"), static_cast<int>(int_field(s, "lemma32_max_degree"))));
    rep.add("lemma52", params,
            check_lemma52_basepoints(l, int_field(s, "lemma52_max_twice_index"), int_field(s, "lemma52_max_grade")));
    rep.add("restriction", params, check_restriction(r, int_field(s, "restriction_max_mode"), deg));
  }
}

inline void embeddings_suite_cmd(const json& s, Report& rep) {
  const auto qs = nonzero_list(s, "svir_q");
  const long win = int_field(s, "svir_window");
  for (std::size_t k = 0; k < qs.size(); ++k) {
    const Scalar& other = qs[(k + 1) % qs.size()];
    for (const Sector sec : {Sector::RB, Sector::NSB})
      rep.add("svir-relations",
              {{"sector", to_string(sec)}, {"q", format_scalar(qs[k])}, {"compare_q", format_scalar(other)}},
              check_svir_relations(qs[k], sec, win, other));
  }
  rep.add("hv-embedding", {{"q", "-1"}, {"window", int_field(s, "hv_window")}},
          check_hv_embedding(int_field(s, "hv_window")));
  for (const auto& q : nonzero_list(s, "tau_q"))
    rep.add("tau-homomorphism", {{"q", format_scalar(q)}},
            check_tau_homomorphism(q, int_field(s, "tau_max_twice_index"), int_field(s, "tau_max_grade")));
}

inline void phi_suite_cmd(const json& s, Report& rep) {
  const auto lambdas = nonzero_list(s, "lambda");
  const auto sigmas = nonzero_list(s, "sigma");
  if (lambdas.size() != sigmas.size()) throw config_error("phi: 'lambda' and 'sigma' must have equal length");
  for (std::size_t k = 0; k < lambdas.size(); ++k)
    if (!(sigmas[k] * sigmas[k] == lambdas[k]))
      throw config_error("phi: sigma " + format_scalar(sigmas[k]) + " does not square to " + format_scalar(lambdas[k]));
  const long win = int_field(s, "window");
  const int cap = static_cast<int>(int_field(s, "degree_cap"));
  const long gr = int_field(s, "max_grade");
  for (const auto& q : nonzero_list(s, "q"))
    for (std::size_t k = 0; k < lambdas.size(); ++k)
      for (const auto& a : scalar_list(s, "a"))
        for (const auto& b : scalar_list(s, "b")) {
          const ModuleParams pl(Sector::NSB, lambdas[k], a, b, q);
          json params = point_params(q, lambdas[k], a, b);
          params["sigma"] = format_scalar(sigmas[k]);
          rep.add("phi-intertwines", params, check_phi_intertwines(pl, sigmas[k], win, cap, gr));
          rep.add("phi-graded-bijective", params, check_phi_graded_bijective(pl, sigmas[k], cap));
          rep.add("phi-closure", params,
                  check_phi_closure_consistency(pl, sigmas[k], default_probe_seeds<OmegaL>(),
                                                DegreeWindow{win, std::min(gr, 1L), cap}));
        }
}

template <class Module>
json closure_certificate(const ClosureResult<Module>& res) {
  json rows = json::array();
  for (std::size_t k = 0; k < res.basis.rank(); ++k) {
    json combo = json::array();
    for (const auto& [c, g] : res.basis.certificate(k)) {
      json word = json::array();
      for (const auto& key : g.word) word.push_back(describe(key));
      combo.push_back({{"coef", format_scalar(c)}, {"seed", g.seed}, {"word", word}});
    }
    rows.push_back({{"row", format_vector(res.row_vector(k))}, {"combination", combo}});
  }
  return {{"rank", res.basis.rank()},
          {"contains_even_constant", res.contains_even_constant},
          {"saturated", res.saturated},
          {"rows", rows}};
}

template <class Module>
Record probe_record(const Module& mod, const DegreeWindow& w, json params, const std::string& id) {
  const auto res = simplicity_probe(mod, w);
  const bool predicted = predicted_simple(mod.params());
  const bool reached = res.verdict == Verdict::ReachedFull;
  Record r{id, std::move(params), reached == predicted};
  r.certificate = {{"verdict", to_string(res.verdict)}, {"predicted_simple", predicted}};
  if (res.failing_seed) {
    r.certificate["failing_seed"] = format_vector(res.seeds[*res.failing_seed]);
    r.certificate["span_rank"] = res.witness.basis.rank();
    r.certificate["inside_closed_subspace"] = span_inside_closed_subspace(res.witness);
  }
  if (!r.pass)
    r.defect = std::string("verdict ") + to_string(res.verdict) + " but the parameters predict " +
               (predicted ? "a simple" : "a non-simple") + " module";
  return r;
}

inline DegreeWindow window_from(const json& s) {
  return {int_field(s, "max_mode"), int_field(s, "max_grade"), static_cast<int>(int_field(s, "max_degree"))};
}

inline void probe_grid_cmd(const json& s, Report& rep) {
  const DegreeWindow w = window_from(s);
  const auto pts = grid(s);
  for (const auto& fam : string_list(s, "families")) {
    const Sector sec = family_sector(fam);
    for (const auto& pt : pts) {
      const ModuleParams mp(sec, pt.lambda, pt.a, pt.b, pt.q);
      const json params = point_params(pt.q, pt.lambda, pt.a, pt.b);
      rep.add(sec == Sector::RB ? probe_record(OmegaR(mp), w, params, "probe/R")
                                : probe_record(OmegaL(mp), w, params, "probe/L"));
    }
  }
}

inline json invariants_json(const ModuleInvariants& inv) {
  return {{"lambda", format_scalar(inv.lambda)},
          {"a", format_scalar(inv.a)},
          {"b", inv.b ? json(format_scalar(*inv.b)) : json("inert")}};
}

inline ModuleInvariants invariants_of(const ModuleParams& mp) {
  return mp.sector() == Sector::RB ? extract_invariants(OmegaR(mp)) : extract_invariants(OmegaL(mp));
}

inline void invariants_grid_cmd(const json& s, Report& rep) {
  const auto pts = grid(s);
  for (const auto& fam : string_list(s, "families")) {
    const Sector sec = family_sector(fam);
    std::vector<ModuleInvariants> found;
    for (const auto& pt : pts) {
      const ModuleParams mp(sec, pt.lambda, pt.a, pt.b, pt.q);
      const auto inv = invariants_of(mp);
      const bool ok = inv.lambda == pt.lambda && inv.a == pt.a &&
                      (mp.b_active() ? inv.b == std::optional<Scalar>(pt.b) : !inv.b.has_value());
      Record r{"invariants/" + fam, point_params(pt.q, pt.lambda, pt.a, pt.b), ok};
      r.certificate = invariants_json(inv);
      if (!ok) r.defect = "extracted " + invariants_json(inv).dump();
      rep.add(std::move(r));
      found.push_back(inv);
    }
    // Isomorphism verdicts against the classification: same q, and equal
    // (lambda, a), and equal b where b is active.
    CheckReport pairs{"isomorphism"};
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (!(pts[i].q == pts[j].q)) continue;
        const bool expected = pts[i].lambda == pts[j].lambda && pts[i].a == pts[j].a &&
                              (!(pts[i].q == Scalar(-1)) || pts[i].b == pts[j].b);
        const bool declared = declared_isomorphic(found[i], found[j]);
        pairs.check(declared == expected, [&] {
          return "points " + std::to_string(i) + " and " + std::to_string(j) + " declared " +
                 (declared ? "isomorphic" : "non-isomorphic");
        });
      }
    rep.add("isomorphism/" + fam, json::object(), pairs);
  }
}

// ---------------------------------------------------------------------------

struct Options {
  std::string sector = "RB";
  std::string family = "R";
  std::string q = "1", lambda = "1", a = "0", b = "0", e = "1";
  std::string x, y, v, text, kind = "element";
  std::vector<std::string> seeds;
  long max_mode = 2, max_grade = 1, max_degree = 4;
  int max_deg = 0;
  std::optional<std::string> config, report;
};

inline ModuleParams module_params(const Options& o) {
  const Sector sec = family_sector(o.family);
  const Scalar q = scalar_field(o.q, "--q");
  const Scalar l = scalar_field(o.lambda, "--lambda");
  if (q.is_zero() || l.is_zero()) throw config_error("--q and --lambda must be nonzero");
  return ModuleParams(sec, l, scalar_field(o.a, "--a"), scalar_field(o.b, "--b"), q);
}

template <class Module>
void closure_cmd(const Module& mod, const Options& o, std::ostream& out, Report& rep) {
  using Vec = typename Module::vector_type;
  using Tag = typename detail::VectorTag<Vec>::type;
  std::vector<Vec> seeds;
  for (const auto& s : o.seeds) seeds.push_back(parse_vector<Tag>(s));
  if (seeds.empty()) throw config_error("closure needs at least one --seed");
  const DegreeWindow w{o.max_mode, o.max_grade, static_cast<int>(o.max_degree)};
  const auto res = closure(mod, seeds, w);
  out << "rank " << res.basis.rank() << ", contains_even_constant " << std::boolalpha << res.contains_even_constant
      << ", saturated " << res.saturated << ", passes " << res.passes << '\n';
  for (std::size_t k = 0; k < res.basis.rank(); ++k) out << "  " << format_vector(res.row_vector(k)) << '\n';
  const auto check = check_certificates(mod, res);
  Record r{"closure/" + o.family, point_params(mod.params().q(), mod.params().lambda(), mod.params().a(),
                                                mod.params().b()),
           check.passed()};
  r.certificate = closure_certificate(res);
  if (!check.passed()) r.defect = check.defects.empty() ? "certificate replay failed" : check.defects.front();
  rep.add(std::move(r));
}

inline void rank2_cmd(const Options& o, std::ostream& out, Report& rep) {
  const Scalar q = scalar_field(o.q, "--q"), l = scalar_field(o.lambda, "--lambda");
  const Scalar a = scalar_field(o.a, "--a"), b = scalar_field(o.b, "--b"), e = scalar_field(o.e, "--e");
  if (q.is_zero() || l.is_zero() || e.is_zero()) throw config_error("--q, --lambda and --e must be nonzero");
  const json params = {{"q", format_scalar(q)}, {"lambda", format_scalar(l)}, {"a", format_scalar(a)},
                       {"b", format_scalar(b)}, {"e", format_scalar(e)}};
  for (const auto& sol : rank2_solve(q, l, a, b, e)) {
    out << to_string(sol.kind) << ": c = " << format_scalar(sol.c) << ", f = " << format_poly(sol.f, "x")
        << ", g = " << format_poly(sol.g, "x") << ", h = " << format_poly(sol.h, "t")
        << ", h~ = " << format_poly(sol.h_tilde, "t") << '\n';
    const auto res = rank2_residuals(sol);
    Record r{std::string("rank2/") + to_string(sol.kind), params, res.all_zero()};
    r.certificate = {{"c", format_scalar(sol.c)},         {"f", format_poly(sol.f, "x")},
                     {"g", format_poly(sol.g, "x")},      {"h", format_poly(sol.h, "t")},
                     {"h_tilde", format_poly(sol.h_tilde, "t")}, {"mu", format_scalar(sol.mu)},
                     {"d", format_scalar(sol.d)}};
    if (!r.pass) r.defect = "constraint residuals are nonzero";
    rep.add(std::move(r));
  }
  if (o.max_deg > 0) {
    const auto bf = rank2_bruteforce_check(q, l, a, b, o.max_deg);
    Record r{"rank2/bruteforce", params, bf.exactly_two_families()};
    r.params["max_deg"] = o.max_deg;
    json pairs = json::array();
    for (const auto& [df, dh] : bf.degree_pairs) pairs.push_back({df, dh});
    r.certificate = {{"candidates", bf.candidates},
                     {"solutions", bf.solutions},
                     {"outside_families", bf.outside_families},
                     {"families", bf.families.size()},
                     {"degree_pairs", pairs}};
    if (!r.pass) r.defect = "solution set is not exactly the two families";
    rep.add(std::move(r));
  }
}

inline void parse_check_cmd(const Options& o, std::ostream& out, Report& rep) {
  std::string canonical;
  bool round_trip = false;
  if (o.kind == "element") {
    const Sector sec = sector_from(o.sector);
    const auto x = parse_element(o.text, sec);
    canonical = format_element(x);
    round_trip = parse_element(canonical, sec) == x;
  } else if (o.kind == "poly") {
    const auto p = parse_poly(o.text);
    canonical = format_poly(p);
    round_trip = parse_poly(canonical) == p;
  } else if (o.kind == "vector") {
    const auto v = parse_vector<RamondSlots>(o.text);
    canonical = format_vector(v);
    round_trip = parse_vector<RamondSlots>(canonical) == v;
  } else if (o.kind == "scalar") {
    const auto s = parse_scalar(o.text);
    canonical = format_scalar(s);
    round_trip = parse_scalar(canonical) == s;
  } else {
    throw config_error("unknown --kind '" + o.kind + "' (expected element, poly, vector or scalar)");
  }
  out << canonical << '\n';
  Record r{"parse-check", {{"kind", o.kind}, {"text", o.text}}, round_trip};
  r.certificate = canonical;
  if (!round_trip) r.defect = "canonical form does not parse back to the same value";
  rep.add(std::move(r));
}

}  // namespace cli

inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                       const CliHooks& hooks = {}) {
  using cli::json;
  CLI::App app{"Exact computations in Block-type Lie superalgebras and their modules", "blocksuper"};
  app.require_subcommand(1);
  cli::Options o;

  auto report_opt = [&](CLI::App* s) { s->add_option("--report", o.report, "write a JSON report to PATH"); };
  auto config_opt = [&](CLI::App* s) { s->add_option("--config", o.config, "suite configuration JSON"); };
  auto point_opts = [&](CLI::App* s) {
    s->add_option("--q", o.q, "structure parameter q");
    s->add_option("--lambda", o.lambda, "module parameter lambda");
    s->add_option("--a", o.a, "module parameter a");
    s->add_option("--b", o.b, "module parameter b (active only at q = -1)");
  };
  auto window_opts = [&](CLI::App* s) {
    s->add_option("--max-mode", o.max_mode, "operator index bound")->check(CLI::NonNegativeNumber);
    s->add_option("--max-grade", o.max_grade, "operator grade bound")->check(CLI::NonNegativeNumber);
    s->add_option("--max-degree", o.max_degree, "vector degree cap")->check(CLI::NonNegativeNumber);
  };
  const auto family_check = CLI::IsMember({"R", "L"});

  auto* bracket_cmd = app.add_subcommand("bracket", "bracket of two algebra elements");
  bracket_cmd->add_option("--sector", o.sector, "RB or NSB")->check(CLI::IsMember({"RB", "NSB"}));
  bracket_cmd->add_option("--q", o.q, "structure parameter q");
  bracket_cmd->add_option("--x", o.x, "first element")->required();
  bracket_cmd->add_option("--y", o.y, "second element")->required();

  auto* act_cmd = app.add_subcommand("act", "action of an element on a module vector");
  act_cmd->add_option("--family", o.family, "R or L")->check(family_check);
  point_opts(act_cmd);
  act_cmd->add_option("--x", o.x, "algebra element")->required();
  act_cmd->add_option("--v", o.v, "vector, e.g. \"even: u; odd: 1\"")->required();

  auto* jacobi_cmd = app.add_subcommand("jacobi-suite", "super-Jacobi and skew-symmetry over the grid");
  auto* module_cmd = app.add_subcommand("module-suite", "module axioms and operator identities over the grid");
  auto* embed_cmd = app.add_subcommand("embeddings-suite", "super-Virasoro, Heisenberg-Virasoro and tau checks");
  auto* phi_cmd = app.add_subcommand("phi-suite", "the isomorphism phi over the grid");
  for (auto* s : {jacobi_cmd, module_cmd, embed_cmd, phi_cmd}) {
    config_opt(s);
    report_opt(s);
  }

  auto* closure_sub = app.add_subcommand("closure", "truncated submodule generated by seed vectors");
  closure_sub->add_option("--family", o.family, "R or L")->check(family_check);
  point_opts(closure_sub);
  window_opts(closure_sub);
  closure_sub->add_option("--seed", o.seeds, "seed vector (repeatable)")->required();
  report_opt(closure_sub);

  auto* probe_cmd = app.add_subcommand("probe", "simplicity probe at one point, or over the configured grid");
  auto* probe_family = probe_cmd->add_option("--family", o.family, "R or L; omit to run the grid")->check(family_check);
  point_opts(probe_cmd);
  window_opts(probe_cmd);
  config_opt(probe_cmd);
  report_opt(probe_cmd);

  auto* inv_cmd = app.add_subcommand("invariants", "invariants at one point, or over the configured grid");
  auto* inv_family = inv_cmd->add_option("--family", o.family, "R or L; omit to run the grid")->check(family_check);
  point_opts(inv_cmd);
  config_opt(inv_cmd);
  report_opt(inv_cmd);

  auto* rank2_sub = app.add_subcommand("rank2", "rank-2 base-point solver");
  point_opts(rank2_sub);
  rank2_sub->add_option("--e", o.e, "family parameter e (nonzero)");
  rank2_sub->add_option("--max-deg", o.max_deg, "also run the brute-force check up to this degree")
      ->check(CLI::Range(1, 8));
  report_opt(rank2_sub);

  auto* parse_sub = app.add_subcommand("parse-check", "parse text and print its canonical form");
  parse_sub->add_option("--kind", o.kind, "element, poly, vector or scalar");
  parse_sub->add_option("--sector", o.sector, "RB or NSB")->check(CLI::IsMember({"RB", "NSB"}));
  parse_sub->add_option("--text", o.text, "text to parse")->required();
  report_opt(parse_sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return 0;
    err << app.help();
    return 2;
  }

  cli::Report rep;
  json config_echo = {{"args", args}};
  try {
    if (bracket_cmd->parsed()) {
      const Sector sec = cli::sector_from(o.sector);
      const Scalar q = cli::scalar_field(o.q, "--q");
      if (q.is_zero()) throw cli::config_error("--q must be nonzero");
      out << format_element(bracket(StructureParams(q, sec), parse_element(o.x, sec), parse_element(o.y, sec),
                                    hooks.rule))
          << '\n';
      return 0;
    }
    if (act_cmd->parsed()) {
      const auto mp = cli::module_params(o);
      const auto x = parse_element(o.x, mp.sector());
      if (mp.sector() == Sector::RB)
        out << format_vector(OmegaR(mp).act(x, parse_vector<RamondSlots>(o.v))) << '\n';
      else
        out << format_vector(OmegaL(mp).act(x, parse_vector<NeveuSchwarzSlots>(o.v))) << '\n';
      return 0;
    }
    const json cfg = cli::load_config(o.config);
    if (jacobi_cmd->parsed()) {
      config_echo["suite"] = cfg["jacobi"];
      cli::jacobi_suite_cmd(cfg["jacobi"], hooks, rep);
    } else if (module_cmd->parsed()) {
      config_echo["suite"] = cfg["module"];
      cli::module_suite_cmd(cfg["module"], hooks, rep);
    } else if (embed_cmd->parsed()) {
      config_echo["suite"] = cfg["embeddings"];
      cli::embeddings_suite_cmd(cfg["embeddings"], rep);
    } else if (phi_cmd->parsed()) {
      config_echo["suite"] = cfg["phi"];
      cli::phi_suite_cmd(cfg["phi"], rep);
    } else if (closure_sub->parsed()) {
      const auto mp = cli::module_params(o);
      if (mp.sector() == Sector::RB)
        cli::closure_cmd(OmegaR(mp), o, out, rep);
      else
        cli::closure_cmd(OmegaL(mp), o, out, rep);
    } else if (probe_cmd->parsed()) {
      if (probe_family->count() > 0) {
        const auto mp = cli::module_params(o);
        const DegreeWindow w{o.max_mode, o.max_grade, static_cast<int>(o.max_degree)};
        const json params = cli::point_params(mp.q(), mp.lambda(), mp.a(), mp.b());
        rep.add(mp.sector() == Sector::RB ? cli::probe_record(OmegaR(mp), w, params, "probe/R")
                                          : cli::probe_record(OmegaL(mp), w, params, "probe/L"));
      } else {
        config_echo["suite"] = cfg["probe"];
        cli::probe_grid_cmd(cfg["probe"], rep);
      }
    } else if (inv_cmd->parsed()) {
      if (inv_family->count() > 0) {
        const auto mp = cli::module_params(o);
        const auto inv = cli::invariants_of(mp);
        cli::Record r{"invariants/" + o.family, cli::point_params(mp.q(), mp.lambda(), mp.a(), mp.b()), true};
        r.certificate = cli::invariants_json(inv);
        rep.add(std::move(r));
      } else {
        config_echo["suite"] = cfg["invariants"];
        cli::invariants_grid_cmd(cfg["invariants"], rep);
      }
    } else if (rank2_sub->parsed()) {
      cli::rank2_cmd(o, out, rep);
    } else if (parse_sub->parsed()) {
      cli::parse_check_cmd(o, out, rep);
    }
  } catch (const semantic_error& e) {
    err << "semantic error: " << e.what() << '\n';
    return 2;
  } catch (const parse_error& e) {
    err << "parse error at offset " << e.offset() << ": " << e.what() << '\n';
    return 2;
  } catch (const cli::config_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const arithmetic_error& e) {
    err << "arithmetic error: " << e.what() << '\n';
    return 2;
  }

  if (!parse_sub->parsed()) rep.print(out);
  if (o.report) {
    std::ofstream f(*o.report);
    if (!f) {
      err << "error: cannot write report to " << *o.report << '\n';
      return 2;
    }
    f << rep.to_json(config_echo).dump(2) << '\n';
    if (!f) {
      err << "error: failed writing report to " << *o.report << '\n';
      return 2;
    }
  }
  return rep.failures() == 0 ? 0 : 1;
}

}  // namespace blocksuper
