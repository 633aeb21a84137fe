#include "norbit/serialize.hpp"

#include <sstream>

#include "norbit/error.hpp"

namespace norbit {

using nlohmann::json;

json partition_json(const Partition& p) { return json(p.parts()); }

json orbit_json(const OrbitDescriptor& o) {
  return json{{"type", to_string(o.type)},
              {"rank", o.rank},
              {"partition", partition_json(o.partition)},
              {"label", o.label ? json(to_string(*o.label)) : json(nullptr)}};
}

OrbitDescriptor orbit_from_json(const json& j) {
  try {
    const auto type = parse_classical_type(j.at("type").get<std::string>());
    const int rank = j.at("rank").get<int>();
    auto parts = j.at("partition").get<std::vector<int>>();
    std::optional<VeryEvenLabel> label;
    if (j.contains("label") && !j.at("label").is_null())
      label = parse_very_even_label(j.at("label").get<std::string>());
    return make_orbit(type, rank, Partition(std::move(parts)), label);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Usage, std::string("malformed orbit JSON: ") + e.what());
  }
}

json rationals_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

json levi_json(ClassicalType t, const LeviShape& levi) {
  return json{{"gl_blocks", levi.gl_blocks}, {"residual_rank", levi.residual_rank}, {"name", levi.to_string(t)}};
}

json branching_json(const Branching& b) {
  json out = json::array();
  for (const auto& [w, m] : b) out.push_back(json{{"weight", rationals_json(w)}, {"multiplicity", m}});
  return out;
}

json infchar_json(const OrbitDescriptor& o, const InfCharResult& r) {
  const auto parity = r.value.d_sign_parity();
  return json{{"orbit", orbit_json(o)},
              {"lambda", rationals_json(r.value.canonical())},
              {"entries", rationals_json(r.value.entries())},
              {"rule", to_string(r.rule)},
              {"d_sign_parity", parity ? json(*parity ? "even" : "odd") : json(nullptr)}};
}

json trace_json(const RecipeTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps)
    steps.push_back(json{{"kind", s.kind},
                         {"columns", s.columns},
                         {"formula", s.formula},
                         {"contribution", rationals_json(s.contribution)}});
  return json{{"columns", trace.columns},
              {"padded", trace.padded},
              {"steps", steps},
              {"label_flip", trace.label_flip},
              {"result", rationals_json(trace.raw)}};
}

json consistency_json(const ConsistencyReport& report) {
  json orbits = json::array();
  for (const auto& e : report.orbits) {
    json checks = json::array();
    for (const auto& c : e.checks) checks.push_back(json{{"kind", c.kind}, {"ok", c.ok}, {"detail", c.detail}});
    orbits.push_back(json{
        {"orbit", orbit_json(e.orbit)},
        {"special", e.special},
        {"even_dual_domain", e.even_dual_domain},
        {"even_dual", e.even_dual ? rationals_json(e.even_dual->canonical()) : json(nullptr)},
        {"recipe", e.recipe ? rationals_json(e.recipe->canonical()) : json(nullptr)},
        {"recipe_error", e.recipe_error.empty() ? json(nullptr) : json(e.recipe_error)},
        {"rule", to_string(e.rule)},
        {"stably_trivial", e.stably_trivial},
        {"triangular", e.triangular},
        {"checks", checks},
    });
  }
  return json{{"type", to_string(report.type)},
              {"rank", report.rank},
              {"pairing_mode", to_string(report.pairing)},
              {"stably_trivial_mode", to_string(report.stably_trivial_mode)},
              {"orbit_count", report.orbits.size()},
              {"check_count", report.check_count()},
              {"discrepancies", report.discrepancies},
              {"exceptions", report.exceptions},
              {"notes", report.notes},
              {"warnings", report.warnings},
              {"orbits", orbits}};
}

json presentation_json(ClassicalType t, const InducingPresentation& p) {
  json gl = json::array();
  for (const auto& lam : p.gl_orbits) gl.push_back(partition_json(lam));
  return json{{"levi", levi_json(t, p.levi)},
              {"gl_orbits", gl},
              {"base", p.base ? orbit_json(*p.base) : json(nullptr)}};
}

json hasse_json(ClassicalType t, int n) {
  json nodes = json::array();
  for (const auto& o : enumerate_orbits(t, n)) nodes.push_back(orbit_json(o));
  json edges = json::array();
  for (const auto& [hi, lo] : hasse_edges(t, n)) edges.push_back(json{{"upper", orbit_json(hi)}, {"lower", orbit_json(lo)}});
  return json{{"type", to_string(t)}, {"rank", n}, {"nodes", nodes}, {"edges", edges}};
}

std::string hasse_dot(ClassicalType t, int n) {
  auto node_id = [](const OrbitDescriptor& o) {
    std::string id = "\"" + o.partition.to_string();
    if (o.label) id += " " + to_string(*o.label);
    return id + "\"";
  };
  std::ostringstream os;
  os << "digraph " << to_string(t) << n << " {\n";
  os << "  rankdir=TB;\n";
  for (const auto& o : enumerate_orbits(t, n)) os << "  " << node_id(o) << ";\n";
  for (const auto& [hi, lo] : hasse_edges(t, n)) os << "  " << node_id(hi) << " -> " << node_id(lo) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace norbit
