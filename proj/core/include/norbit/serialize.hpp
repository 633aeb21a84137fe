#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "norbit/induction.hpp"
#include "norbit/infchar.hpp"
#include "norbit/orbit.hpp"
#include "norbit/weights.hpp"

namespace norbit {

nlohmann::json partition_json(const Partition& p);
/// {"type":"B","rank":2,"partition":[3,1,1],"label":null}
nlohmann::json orbit_json(const OrbitDescriptor& o);
/// Inverse of orbit_json; validates. Throws ErrorKind::Usage on bad shape.
OrbitDescriptor orbit_from_json(const nlohmann::json& j);

/// Exact rationals as strings: ["1/2","-1"].
nlohmann::json rationals_json(const std::vector<Rational>& v);
nlohmann::json levi_json(ClassicalType t, const LeviShape& levi);
nlohmann::json branching_json(const Branching& b);

/// {"orbit":…, "lambda":[canonical], "entries":[raw], "rule":…,
///  "d_sign_parity":…}
nlohmann::json infchar_json(const OrbitDescriptor& o, const InfCharResult& r);
nlohmann::json trace_json(const RecipeTrace& trace);
nlohmann::json consistency_json(const ConsistencyReport& report);
nlohmann::json presentation_json(ClassicalType t, const InducingPresentation& p);

/// Hasse diagram of the closure order.
nlohmann::json hasse_json(ClassicalType t, int n);
std::string hasse_dot(ClassicalType t, int n);

}  // namespace norbit
