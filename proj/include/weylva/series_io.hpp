#pragma once

#include "weylva/character.hpp"

#include <json.hpp>

#include <string>

namespace weylva {

nlohmann::ordered_json series_to_json(const BivariateSeries& s);
// Metadata as leading "# key=value" lines, then a d,j,coefficient table.
std::string series_to_csv(const BivariateSeries& s);
BivariateSeries series_from_csv(const std::string& csv);
BivariateSeries series_from_json(const nlohmann::ordered_json& j);

}  // namespace weylva
