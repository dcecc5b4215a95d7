#pragma once

#include <json.hpp>

#include "a2m/constructor.hpp"
#include "a2m/minor.hpp"

namespace a2m {

/// {"ell": l, "m": m} or {"k": k}
nlohmann::json target_to_json(const MinorTarget& target);
MinorTarget target_from_json(const nlohmann::json& j);

/// {"target": ..., "clique_side": [[...]], "independent_side": [[...]]}
nlohmann::json model_to_json(const MinorTarget& target, const MinorModel& model);
MinorModel model_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& cert);

}  // namespace a2m
