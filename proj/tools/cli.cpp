#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "norbit/error.hpp"
#include "norbit/induction.hpp"
#include "norbit/infchar.hpp"
#include "norbit/oracle.hpp"
#include "norbit/orbit.hpp"
#include "norbit/serialize.hpp"
#include "norbit/verify.hpp"
#include "norbit/weights.hpp"

namespace norbit::cli {
namespace {

using nlohmann::json;

struct OrbitArgs {
  std::string type;
  int rank = 0;
  std::string partition;
  std::string label;

  OrbitDescriptor orbit() const {
    std::optional<VeryEvenLabel> l;
    if (!label.empty()) l = parse_very_even_label(label);
    return make_orbit(parse_classical_type(type), rank, Partition::parse(partition), l);
  }
};

struct OracleArgs {
  std::uint64_t seed = 0;
  std::uint64_t second_seed = 0;
  std::size_t samples = 0;
  double tolerance = 1e-8;
  std::size_t max_monomials = 6000;
  CLI::Option* seed_opt = nullptr;

  OracleConfig config() const {
    OracleConfig cfg;
    if (seed_opt && seed_opt->count() > 0) {
      cfg.seed = seed;
    } else if (const char* env = std::getenv("NORBIT_SEED"); env && *env) {
      try {
        cfg.seed = std::stoull(env);
      } catch (const std::exception&) {
        throw Error(ErrorKind::Usage, std::string("NORBIT_SEED is not an unsigned integer: ") + env);
      }
    }
    cfg.second_seed = second_seed;
    cfg.samples = samples;
    cfg.tolerance = tolerance;
    cfg.max_monomials = max_monomials;
    cfg.validate();
    return cfg;
  }
};

void add_format(CLI::App* sub, std::string& format, std::vector<std::string> allowed) {
  sub->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(allowed)))->capture_default_str();
}

void add_type_rank(CLI::App* sub, OrbitArgs& a) {
  sub->add_option("type", a.type, "Classical type: A, B, C or D")->required();
  sub->add_option("rank", a.rank, "Rank n (type A means gl(n+1))")->required()->check(CLI::NonNegativeNumber);
}

void add_orbit(CLI::App* sub, OrbitArgs& a) {
  add_type_rank(sub, a);
  sub->add_option("partition", a.partition, "Partition, e.g. \"3,1,1\" or \"1^4\"")->required();
  sub->add_option("--label", a.label, "Very-even label I or II (type D)");
}

void add_oracle(CLI::App* sub, OracleArgs& o) {
  o.seed_opt = sub->add_option("--seed", o.seed, "Oracle seed (overrides NORBIT_SEED)");
  sub->add_option("--second-seed", o.second_seed, "Cross-check seed (default seed+1)");
  sub->add_option("--samples", o.samples, "Sample points per degree (default monomials+16)");
  sub->add_option("--tolerance", o.tolerance, "Relative singular-value threshold")->capture_default_str();
  sub->add_option("--max-monomials", o.max_monomials, "Monomial count bound")->capture_default_str();
}

std::vector<int> parse_ints(const std::string& text) {
  if (text.empty()) return {};
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Usage, "cannot parse integer list '" + text + "'");
    }
  }
  return out;
}

Weight parse_weight(const std::string& text) {
  Weight out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

void emit(std::ostream& out, const std::string& format, const json& j, const std::string& text) {
  if (format == "json")
    out << j.dump(2) << '\n';
  else
    out << text;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Inducing data from --blocks (zero orbits) and --gl-orbit (explicit).
std::vector<Partition> gl_orbits_from(const std::string& blocks, const std::vector<std::string>& explicit_orbits) {
  std::vector<Partition> out;
  for (int k : parse_ints(blocks)) {
    if (k <= 0) throw Error(ErrorKind::Usage, "block sizes must be positive");
    out.push_back(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)));
  }
  for (const auto& p : explicit_orbits) out.push_back(Partition::parse(p));
  if (out.empty()) throw Error(ErrorKind::Usage, "give --blocks or --gl-orbit");
  return out;
}

int total_size(const std::vector<Partition>& ps) {
  int s = 0;
  for (const auto& p : ps) s += p.size();
  return s;
}

// ---- subcommands -----------------------------------------------------------

int cmd_validate(const OrbitArgs& a, const std::string& format, std::ostream& out) {
  try {
    const auto o = a.orbit();
    emit(out, format, json{{"valid", true}, {"orbit", orbit_json(o)}}, "valid " + o.to_string() + "\n");
    return kOk;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Validation) throw;
    emit(out, format, json{{"valid", false}, {"error", e.what()}}, std::string("invalid: ") + e.what() + "\n");
    return kUsage;
  }
}

int cmd_orbit_info(const OrbitArgs& a, const std::string& format, std::ostream& out) {
  const auto o = a.orbit();
  const auto h = dynkin_h(o);
  const auto dual = bv_dual(o);
  const auto tri = triangular_parameter(o);
  json j{{"orbit", orbit_json(o)},
         {"name", o.to_string()},
         {"transpose", partition_json(transpose(o.partition))},
         {"h", h},
         {"dynkin_labels", dynkin_labels(o.type, h)},
         {"even", is_even(o)},
         {"special", is_special(o)},
         {"bv_dual", orbit_json(dual)},
         {"component_group_order", component_group_order(o)},
         {"stably_trivial",
          {{"paper-literal", is_stably_trivial(o, StablyTrivialMode::PaperLiteral)},
           {"parity-parallel", is_stably_trivial(o, StablyTrivialMode::ParityParallel)}}},
         {"triangular", tri ? json(*tri) : json(nullptr)}};
  std::ostringstream text;
  text << o.to_string() << '\n'
       << "  transpose        " << transpose(o.partition).to_string() << '\n'
       << "  h                (" << join(h) << ")\n"
       << "  dynkin labels    " << join(dynkin_labels(o.type, h)) << '\n'
       << "  even             " << (is_even(o) ? "yes" : "no") << '\n'
       << "  special          " << (is_special(o) ? "yes" : "no") << '\n'
       << "  bv dual          " << dual.to_string() << '\n'
       << "  |A(O)|           " << component_group_order(o) << '\n'
       << "  stably trivial   " << (is_stably_trivial(o) ? "yes" : "no") << '\n'
       << "  triangular       " << (tri ? "m=" + std::to_string(*tri) : std::string("no")) << '\n';
  try {
    const auto presentations = inducing_presentations(o);
    json list = json::array();
    for (const auto& p : presentations) list.push_back(presentation_json(o.type, p));
    j["cuspidal"] = presentations.empty();
    j["presentations"] = list;
    text << "  cuspidal         " << (presentations.empty() ? "yes" : "no") << '\n';
    for (const auto& p : presentations) text << "    induced from   " << p.to_string(o.type) << '\n';
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Bound) throw;
    j["cuspidal"] = nullptr;
    j["presentations"] = nullptr;
    text << "  cuspidal         unknown (" << e.what() << ")\n";
  }
  try {
    const auto r = infchar(o);
    j["infchar"] = infchar_json(o, r);
    text << "  infchar          " << r.value.to_string() << "  [" << to_string(r.rule) << "]\n";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Recipe) throw;
    j["infchar"] = json{{"error", e.what()}};
    text << "  infchar          error: " << e.what() << '\n';
  }
  emit(out, format, j, text.str());
  return kOk;
}

int cmd_orbit_list(const OrbitArgs& a, const std::string& format, std::ostream& out) {
  const auto t = parse_classical_type(a.type);
  json list = json::array();
  std::ostringstream text;
  for (const auto& o : enumerate_orbits(t, a.rank)) {
    list.push_back(json{{"orbit", orbit_json(o)}, {"special", is_special(o)}, {"even", is_even(o)}});
    text << o.to_string() << (is_special(o) ? "  special" : "") << '\n';
  }
  emit(out, format, json{{"type", to_string(t)}, {"rank", a.rank}, {"count", list.size()}, {"orbits", list}},
       text.str());
  return kOk;
}

int cmd_hasse(const OrbitArgs& a, const std::string& format, std::ostream& out) {
  const auto t = parse_classical_type(a.type);
  if (format == "dot") {
    out << hasse_dot(t, a.rank);
  } else {
    std::ostringstream text;
    for (const auto& [hi, lo] : hasse_edges(t, a.rank)) text << hi.to_string() << " > " << lo.to_string() << '\n';
    emit(out, format, hasse_json(t, a.rank), text.str());
  }
  return kOk;
}

int cmd_infchar(const OrbitArgs& a, const std::string& format, const std::string& mode_text, bool explain,
                std::ostream& out) {
  const auto o = a.orbit();
  const auto mode = parse_pairing_mode(mode_text);
  const auto r = infchar(o, mode);
  json j = infchar_json(o, r);
  j["pairing_mode"] = to_string(mode);
  std::ostringstream text;
  text << o.to_string() << "  lambda = " << r.value.to_string() << "  [" << to_string(r.rule) << "]\n";
  if (explain) {
    RecipeTrace trace;
    try {
      const auto value = recipe_infchar(o, mode, &trace);
      j["trace"] = trace_json(trace);
      text << trace.to_text();
      if (r.rule == InfCharRule::EvenDual)
        text << "recipe value " << value.to_string() << (infchar_equal(value, r.value) ? " agrees" : " differs")
             << " with the even-dual value\n";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Recipe) throw;
      j["trace"] = json{{"error", e.what()}};
      text << "recipe: " << e.what() << '\n';
    }
  }
  emit(out, format, j, text.str());
  return kOk;
}

struct InduceArgs {
  OrbitArgs ambient;
  std::string base;
  std::string base_label;
  std::string blocks;
  std::vector<std::string> gl_orbits;
};

int cmd_induce(const InduceArgs& a, const std::string& format, std::ostream& out) {
  const auto t = parse_classical_type(a.ambient.type);
  const auto gl = gl_orbits_from(a.blocks, a.gl_orbits);
  OrbitDescriptor result;
  std::optional<OrbitDescriptor> base;
  if (t == ClassicalType::A) {
    if (!a.base.empty()) throw Error(ErrorKind::Usage, "type A has no residual factor; drop --base");
    if (total_size(gl) != a.ambient.rank + 1)
      throw Error(ErrorKind::Validation, "gl blocks must sum to n+1 in type A");
    result = induce_type_a(gl);
  } else {
    const int base_rank = a.ambient.rank - total_size(gl);
    if (base_rank < 0) throw Error(ErrorKind::Validation, "gl blocks exceed the rank");
    std::optional<VeryEvenLabel> l;
    if (!a.base_label.empty()) l = parse_very_even_label(a.base_label);
    const auto p = a.base.empty() ? zero_orbit(t, base_rank).partition : Partition::parse(a.base);
    base = make_orbit(t, base_rank, p, l);
    result = induce_general(t, a.ambient.rank, *base, gl);
  }
  InducingPresentation pres;
  for (const auto& p : gl) pres.levi.gl_blocks.push_back(p.size());
  pres.levi.residual_rank = base ? base->rank : 0;
  pres.gl_orbits = gl;
  pres.base = base;
  emit(out, format, json{{"presentation", presentation_json(t, pres)}, {"induced", orbit_json(result)}},
       pres.to_string(t) + " -> " + result.to_string() + "\n");
  return kOk;
}

int cmd_complete(const OrbitArgs& a, const std::string& format, int bound, const std::string& st_mode,
                 std::ostream& out) {
  const auto o = a.orbit();
  const auto r = complete_to_triangular(o, bound, parse_stably_trivial_mode(st_mode));
  json j{{"orbit", orbit_json(o)}, {"search_bound", r.search_bound}, {"candidates_tried", r.candidates_tried}};
  std::ostringstream text;
  if (r.completion) {
    j["blocks"] = r.completion->blocks;
    j["triangular"] = orbit_json(r.completion->triangular);
    j["diagnostic"] = nullptr;
    text << o.to_string() << " + gl blocks {" << join(r.completion->blocks) << "} -> "
         << r.completion->triangular.to_string() << '\n';
  } else {
    j["blocks"] = nullptr;
    j["triangular"] = nullptr;
    j["diagnostic"] = r.diagnostic;
    text << o.to_string() << ": no completion (" << r.diagnostic << ")\n";
  }
  emit(out, format, j, text.str());
  return kOk;
}

int cmd_bvdual(const OrbitArgs& a, const std::string& format, std::ostream& out) {
  const auto o = a.orbit();
  const auto d = bv_dual(o);
  emit(out, format, json{{"orbit", orbit_json(o)}, {"dual", orbit_json(d)}, {"special", is_special(o)}},
       o.to_string() + " -> " + d.to_string() + "\n");
  return kOk;
}

struct BranchArgs {
  OrbitArgs ambient;
  std::string weight;
  std::string blocks;
  bool trivial = false;
  std::int64_t dim_bound = kDefaultDiagramBound;
};

int cmd_branch(const BranchArgs& a, const std::string& format, std::ostream& out) {
  const auto t = parse_classical_type(a.ambient.type);
  const RootSystem rs(t, a.ambient.rank);
  const Weight w = parse_weight(a.weight);
  LeviShape levi{parse_ints(a.blocks), 0};
  int used = 0;
  for (int k : levi.gl_blocks) used += k;
  levi.residual_rank = t == ClassicalType::A ? 0 : a.ambient.rank - used;
  check_levi(t, a.ambient.rank, levi);
  json j{{"group", rs.name()}, {"weight", rationals_json(w)}, {"levi", levi_json(t, levi)}};
  std::ostringstream text;
  if (a.trivial) {
    const auto m = trivial_multiplicity(rs, w, levi, a.dim_bound);
    j["trivial_multiplicity"] = m;
    text << "[" << to_string(w) << " : triv] = " << m << '\n';
  } else {
    const auto b = branch_to_levi(rs, w, levi, a.dim_bound);
    j["branching"] = branching_json(b);
    for (const auto& [sigma, m] : b) text << to_string(sigma) << "  x" << m << '\n';
  }
  emit(out, format, j, text.str());
  return kOk;
}

// ---- verify ----------------------------------------------------------------

int emit_reports(std::ostream& out, const std::string& format, const std::vector<VerifyReport>& reports) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (format == "json") {
    if (reports.size() == 1) {
      out << reports.front().to_json().dump(2) << '\n';
    } else {
      json list = json::array();
      for (const auto& r : reports) list.push_back(r.to_json());
      out << json{{"status", ok ? "pass" : "fail"}, {"reports", list}}.dump(2) << '\n';
    }
  } else {
    for (const auto& r : reports) {
      out << r.check << ' ' << (r.passed() ? "PASS" : "FAIL") << "  pass=" << r.count("pass")
          << " fail=" << r.count("fail") << " uncertified=" << r.count("uncertified") << '\n';
      for (const auto& c : r.cases)
        if (c.status == "fail") out << "  fail " << c.name << "  " << c.witness.dump() << '\n';
    }
  }
  return ok ? kOk : kDiscrepancy;
}

int cmd_consistency(const OrbitArgs& a, const std::string& format, const std::string& pairing,
                    const std::string& st_mode, int rank_bound, std::ostream& out) {
  const auto report = consistency_report(parse_classical_type(a.type), a.rank, parse_pairing_mode(pairing),
                                         parse_stably_trivial_mode(st_mode), rank_bound);
  std::ostringstream text;
  text << "consistency " << to_string(report.type) << report.rank << ' '
       << (report.discrepancies.empty() ? "PASS" : "FAIL") << "  orbits=" << report.orbits.size()
       << " checks=" << report.check_count() << " discrepancies=" << report.discrepancies.size() << '\n';
  for (const auto& d : report.discrepancies) text << "  discrepancy " << d << '\n';
  for (const auto& n : report.notes) text << "  note " << n << '\n';
  for (const auto& w : report.warnings) text << "  warning " << w << '\n';
  emit(out, format, consistency_json(report), text.str());
  return report.discrepancies.empty() ? kOk : kDiscrepancy;
}

int error_code(const Error& e) { return e.kind() == ErrorKind::Oracle ? kDiscrepancy : kUsage; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotent orbits of classical Lie algebras: induction, duality and infinitesimal characters",
               "norbit"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  app.set_version_flag("--version", "norbit 0.1.0");

  std::string format = "text";
  OrbitArgs orbit;

  auto* validate = app.add_subcommand("validate", "Check that a partition names an orbit");
  add_orbit(validate, orbit);
  add_format(validate, format, {"text", "json"});

  auto* info = app.add_subcommand("orbit-info", "Invariants of one orbit");
  add_orbit(info, orbit);
  add_format(info, format, {"text", "json"});

  auto* list = app.add_subcommand("orbit-list", "All orbits of a classical algebra");
  add_type_rank(list, orbit);
  add_format(list, format, {"text", "json"});

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the closure order");
  add_type_rank(hasse, orbit);
  add_format(hasse, format, {"text", "json", "dot"});

  std::string pairing = "parity";
  bool explain = false;
  auto* ic = app.add_subcommand("infchar", "Infinitesimal character attached to an orbit");
  add_orbit(ic, orbit);
  add_format(ic, format, {"text", "json"});
  ic->add_option("--pairing-mode", pairing, "Equal-pair rule: parity, literal or uniform")->capture_default_str();
  ic->add_flag("--explain", explain, "Print the column-pairing trace");

  InduceArgs induce_args;
  auto* induce = app.add_subcommand("induce", "Induce an orbit from a Levi subalgebra");
  add_type_rank(induce, induce_args.ambient);
  induce->add_option("--base", induce_args.base, "Residual orbit partition (default zero orbit)");
  induce->add_option("--base-label", induce_args.base_label, "Very-even label of the residual orbit");
  induce->add_option("--blocks", induce_args.blocks, "gl block sizes carrying the zero orbit, e.g. \"2,1\"");
  induce->add_option("--gl-orbit", induce_args.gl_orbits, "Orbit on one gl block, e.g. \"2,1\" (repeatable)");
  add_format(induce, format, {"text", "json"});

  int complete_bound = 12;
  std::string st_mode = "paper-literal";
  auto* complete = app.add_subcommand("complete", "Complete a stably trivial orbit to a triangular one");
  add_orbit(complete, orbit);
  complete->add_option("--bound", complete_bound, "Largest total gl block size searched")->capture_default_str();
  complete->add_option("--stably-trivial-mode", st_mode, "paper-literal or parity-parallel")->capture_default_str();
  add_format(complete, format, {"text", "json"});

  auto* bvdual = app.add_subcommand("bvdual", "Duality to the dual type");
  add_orbit(bvdual, orbit);
  add_format(bvdual, format, {"text", "json"});

  BranchArgs branch_args;
  std::string branch_format = "json";
  auto* branch = app.add_subcommand("branch", "Restrict an irreducible representation to a Levi subalgebra");
  add_type_rank(branch, branch_args.ambient);
  branch->add_option("--weight", branch_args.weight, "Highest weight in epsilon coordinates, e.g. \"1,0\"")
      ->required();
  branch->add_option("--blocks", branch_args.blocks, "gl block sizes; the rest is the residual factor");
  branch->add_flag("--trivial", branch_args.trivial, "Only the multiplicity of the trivial Levi representation");
  branch->add_option("--dim-bound", branch_args.dim_bound, "Largest representation dimension")->capture_default_str();
  add_format(branch, branch_format, {"text", "json"});

  // verify
  std::string verify_format = "json";
  OracleArgs oracle;
  std::int64_t dim_bound = 200;
  int degree = 3;
  auto* verify = app.add_subcommand("verify", "Verification checks; exit 2 on any discrepancy");
  verify->require_subcommand(1);

  auto* v_rich = verify->add_subcommand("richardson", "Richardson equality in type A");
  add_orbit(v_rich, orbit);
  v_rich->add_option("--dim-bound", dim_bound, "Largest dim of mu")->capture_default_str();
  v_rich->add_option("--degree", degree, "Oracle degree bound")->capture_default_str();
  add_oracle(v_rich, oracle);
  add_format(v_rich, verify_format, {"text", "json"});

  InduceArgs p55;
  int all_type_a = 0;
  auto* v_p55 = verify->add_subcommand("prop55", "Induced multiplicities against the induced orbit");
  v_p55->add_option("type", p55.ambient.type, "Classical type");
  v_p55->add_option("rank", p55.ambient.rank, "Rank")->check(CLI::NonNegativeNumber);
  v_p55->add_option("--base", p55.base, "Residual orbit partition (default zero orbit)");
  v_p55->add_option("--blocks", p55.blocks, "gl blocks carrying the zero orbit");
  v_p55->add_option("--gl-orbit", p55.gl_orbits, "Orbit on one gl block (repeatable, type A)");
  v_p55->add_option("--all-type-a", all_type_a, "Every type-A datum in gl(N), N up to this size");
  v_p55->add_option("--dim-bound", dim_bound, "Largest dim of mu")->capture_default_str();
  v_p55->add_option("--degree", degree, "Oracle degree bound")->capture_default_str();
  add_oracle(v_p55, oracle);
  add_format(v_p55, verify_format, {"text", "json"});

  int block_bound = 6;
  auto* v_stage = verify->add_subcommand("stage", "Induction in stages agrees with induction at once");
  add_type_rank(v_stage, orbit);
  v_stage->add_option("--block-bound", block_bound, "Largest total block size")->capture_default_str();
  add_format(v_stage, verify_format, {"text", "json"});

  auto* v_dual = verify->add_subcommand("duality", "Duality is an order-reversing bijection on specials");
  add_type_rank(v_dual, orbit);
  add_format(v_dual, verify_format, {"text", "json"});

  int collapse_size = 0;
  std::string collapse_type;
  auto* v_coll = verify->add_subcommand("collapse", "Greedy collapse equals the brute-force maximum");
  v_coll->add_option("type", collapse_type, "Classical type")->required();
  v_coll->add_option("size", collapse_size, "Partition size")->required()->check(CLI::NonNegativeNumber);
  add_format(v_coll, verify_format, {"text", "json"});

  int max_degree = 3;
  std::string expected;
  auto* v_hilb = verify->add_subcommand("hilbert", "Hilbert function of an orbit closure");
  add_orbit(v_hilb, orbit);
  v_hilb->add_option("--max-degree", max_degree, "Largest degree")->capture_default_str();
  v_hilb->add_option("--expect", expected, "Expected values from degree 0, e.g. \"1,3,5,7\"");
  add_oracle(v_hilb, oracle);
  add_format(v_hilb, verify_format, {"text", "json"});

  int rank_bound = kDefaultConsistencyRankBound;
  auto* v_cons = verify->add_subcommand("consistency", "Infinitesimal-character consistency report");
  add_type_rank(v_cons, orbit);
  v_cons->add_option("--pairing-mode", pairing, "parity, literal or uniform")->capture_default_str();
  v_cons->add_option("--stably-trivial-mode", st_mode, "paper-literal or parity-parallel")->capture_default_str();
  v_cons->add_option("--rank-bound", rank_bound, "Refuse ranks above this")->capture_default_str();
  add_format(v_cons, verify_format, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(orbit, format, out);
    if (info->parsed()) return cmd_orbit_info(orbit, format, out);
    if (list->parsed()) return cmd_orbit_list(orbit, format, out);
    if (hasse->parsed()) return cmd_hasse(orbit, format, out);
    if (ic->parsed()) return cmd_infchar(orbit, format, pairing, explain, out);
    if (induce->parsed()) return cmd_induce(induce_args, format, out);
    if (complete->parsed()) return cmd_complete(orbit, format, complete_bound, st_mode, out);
    if (bvdual->parsed()) return cmd_bvdual(orbit, format, out);
    if (branch->parsed()) return cmd_branch(branch_args, branch_format, out);

    if (v_rich->parsed())
      return emit_reports(out, verify_format,
                          {check_richardson_typeA(orbit.orbit(), dim_bound, degree, oracle.config())});
    if (v_p55->parsed()) {
      std::vector<VerifyReport> reports;
      if (all_type_a > 0) {
        for (const auto& d : prop55_typeA_cases(all_type_a)) reports.push_back(check_prop55(d, dim_bound, degree));
      } else {
        if (p55.ambient.type.empty()) throw Error(ErrorKind::Usage, "prop55 needs TYPE RANK or --all-type-a");
        Prop55Data d;
        d.type = parse_classical_type(p55.ambient.type);
        d.rank = p55.ambient.rank;
        d.gl_orbits = gl_orbits_from(p55.blocks, p55.gl_orbits);
        if (d.type != ClassicalType::A) {
          const int base_rank = d.rank - total_size(d.gl_orbits);
          if (base_rank < 0) throw Error(ErrorKind::Validation, "gl blocks exceed the rank");
          d.base = make_orbit(d.type, base_rank,
                              p55.base.empty() ? zero_orbit(d.type, base_rank).partition : Partition::parse(p55.base));
        } else if (total_size(d.gl_orbits) != d.rank + 1) {
          throw Error(ErrorKind::Validation, "gl blocks must sum to n+1 in type A");
        }
        reports.push_back(check_prop55(d, dim_bound, degree, oracle.config()));
      }
      return emit_reports(out, verify_format, reports);
    }
    if (v_stage->parsed())
      return emit_reports(out, verify_format,
                          {check_stage_independence(parse_classical_type(orbit.type), orbit.rank, block_bound)});
    if (v_dual->parsed())
      return emit_reports(out, verify_format, {check_duality(parse_classical_type(orbit.type), orbit.rank)});
    if (v_coll->parsed())
      return emit_reports(out, verify_format, {check_collapse(parse_classical_type(collapse_type), collapse_size)});
    if (v_hilb->parsed()) {
      std::vector<std::int64_t> exp;
      for (int v : parse_ints(expected)) exp.push_back(v);
      return emit_reports(out, verify_format, {check_hilbert(orbit.orbit(), max_degree, oracle.config(), exp)});
    }
    if (v_cons->parsed()) return cmd_consistency(orbit, verify_format, pairing, st_mode, rank_bound, out);
  } catch (const Error& e) {
    err << "norbit: " << to_string(e.kind()) << " error: " << e.what() << '\n';
    return error_code(e);
  } catch (const std::exception& e) {
    err << "norbit: error: " << e.what() << '\n';
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace norbit::cli
