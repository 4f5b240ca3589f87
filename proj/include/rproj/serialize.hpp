// serialize.hpp - JSON and plain-text renderings of the query results.
// JSON key and array order is fixed (documented in README), so equal
// values always serialize to identical bytes. Unreachable distances
// render as null in JSON and "inf" in text.
#pragma once

#include "rproj/oracle.hpp"
#include "rproj/paths.hpp"
#include "rproj/projection.hpp"

#include <json.hpp>

#include <string>

namespace rproj {

using Json = nlohmann::ordered_json;

Json stats_json(const BuildStats& stats);
Json projection_json(const RefinedProjection& p);
Json path_set_json(const RefinedProjection& p, const PathSet& set);
Json distance_table_json(const DistanceTable& table);
Json apsp_json(const ApspResult& result);
Json report_json(const OracleReport& report);

std::string projection_text(const RefinedProjection& p);
std::string path_set_text(const RefinedProjection& p, const PathSet& set);
std::string distance_table_text(const DistanceTable& table);
std::string apsp_text(const ApspResult& result);
std::string report_text(const OracleReport& report);

}  // namespace rproj
