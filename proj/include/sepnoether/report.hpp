#pragma once

#include <json.hpp>

#include "sepnoether/constructions.hpp"

namespace sepnoether {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const MultVector& m);
nlohmann::json to_json(const Context& ctx);  // list of coordinate arrays
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const BetaSepResult& r, bool include_elapsed = true);
nlohmann::json to_json(const WitnessPackage& pkg);
nlohmann::json to_json(const TheoremCheck& check);
nlohmann::json to_json(const TheoremReport& report, bool include_elapsed = true);

/// Structural constants: rank, exponent, order, d*, upper bound.
nlohmann::json group_info_json(const GroupSpec& group);

/// Parses the witness decomposition JSON back; checks the schema shape.
Decomposition decomposition_from_json(const nlohmann::json& j);

}  // namespace sepnoether
