#pragma once

#include <string>

#include <json.hpp>

#include "gwc/conductor.hpp"

namespace gwc {

/// Strict scenario-file schema: unknown fields are rejected, minimal
/// polynomials are integer coefficient lists with the constant term first.
DegenerationScenario parse_scenario(const nlohmann::json& doc);
DegenerationScenario load_scenario_file(const std::string& path);

/// GW classes serialize as sorted {entry, multiplicity} lists.
nlohmann::json gw_to_json(const GWClass& g);
GWClass gw_from_json(const nlohmann::json& j);

nlohmann::json profile_to_json(const InvariantProfile& p);
nlohmann::json check_report_to_json(const CheckReport& r);
nlohmann::json curve_report_to_json(const CurveCheckReport& r);

}  // namespace gwc
