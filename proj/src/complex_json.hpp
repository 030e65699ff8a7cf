#pragma once

// Internal helpers shared by the complex importer/exporter and the
// problem-file parser. Not part of the public API.

#include <json.hpp>

#include "bettichar/resolution.hpp"

namespace bettichar::detail {

FreeComplex complexFromJson(const nlohmann::json& doc, const GradedRing& ring,
                            const std::string& path);
nlohmann::json complexToJson(const FreeComplex& c, const GradedRing& ring);

DegreeVector degreeFromJson(const nlohmann::json& value,
                            const std::string& path);

}  // namespace bettichar::detail
