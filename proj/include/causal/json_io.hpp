// JSON rendering for machine consumers. Field names are pinned by
// docs/schema.md; tests validate the shapes.

#pragma once

#include <string>

#include <json.hpp>

#include "causal/corpus.hpp"
#include "causal/paths.hpp"

namespace causal::json_io {

nlohmann::json settings_json(const CausalModel& model,
                             const std::vector<std::pair<VarId, ValueIndex>>& settings);
nlohmann::json witness_json(const CausalModel& model, const Witness& witness);
nlohmann::json assignment_json(const CausalModel& model, const Assignment& assignment);
nlohmann::json verdict_json(const CausalModel& model, const CauseVerdict& verdict,
                            const std::string& query_text);
nlohmann::json path_verdict_json(const CausalModel& model, const PathVerdict& verdict,
                                 const std::string& query_text, const std::string& variant);

}  // namespace causal::json_io
