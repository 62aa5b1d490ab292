#pragma once

#include <string>

#include "json.hpp"
#include "projcone/boxgeom.hpp"
#include "projcone/btcone.hpp"
#include "projcone/flower.hpp"
#include "projcone/inequality.hpp"
#include "projcone/refuter.hpp"

namespace projcone {

// All rationals serialize as canonical strings "p" or "p/q". Parsers throw
// SchemaError naming the offending field. nlohmann::json orders keys
// alphabetically, so dumps are deterministic.

nlohmann::json inequality_to_json(const ProjectionInequality& ineq);
ProjectionInequality inequality_from_json(const nlohmann::json& j);

nlohmann::json pi_to_json(const LogProjectionVector& pi);
LogProjectionVector pi_from_json(const nlohmann::json& j);

nlohmann::json flower_to_json(const Flower& fl);
Flower flower_from_json(const nlohmann::json& j);

nlohmann::json box_union_to_json(const BoxUnion& u);
BoxUnion box_union_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const RefutationReport& report);

nlohmann::json combination_to_json(const BtCombination& comb);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace projcone
