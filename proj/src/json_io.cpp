#include "causal/json_io.hpp"

#include "causal/dsl.hpp"

namespace causal::json_io {

namespace {

std::string value_name(const CausalModel& model, VarId var, ValueIndex idx) {
  return model.variable(var).domain[static_cast<std::size_t>(idx)].name;
}

}  // namespace

nlohmann::json settings_json(const CausalModel& model,
                             const std::vector<std::pair<VarId, ValueIndex>>& settings) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [var, idx] : settings) {
    j[model.variable(var).name] = value_name(model, var, idx);
  }
  return j;
}

nlohmann::json witness_json(const CausalModel& model, const Witness& witness) {
  nlohmann::json j;
  j["w"] = settings_json(model, witness.w);
  j["x_prime"] = settings_json(model, witness.x_prime);
  return j;
}

nlohmann::json assignment_json(const CausalModel& model, const Assignment& assignment) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < model.var_count(); ++i) {
    VarId v = static_cast<VarId>(i);
    if (assignment.has(v)) {
      j[model.variable(v).name] = value_name(model, v, assignment.get(v));
    }
  }
  return j;
}

nlohmann::json verdict_json(const CausalModel& model, const CauseVerdict& verdict,
                            const std::string& query_text) {
  nlohmann::json j;
  j["schema"] = "causecheck.verdict/1";
  j["query"] = query_text;
  j["variant"] = to_string(verdict.variant);
  j["elapsed"] = verdict.elapsed_ms;
  switch (verdict.outcome) {
    case Outcome::Cause:
      j["is_cause"] = true;
      j["witness"] = witness_json(model, *verdict.witness);
      break;
    case Outcome::NotCause: {
      j["is_cause"] = false;
      nlohmann::json failure;
      failure["clause"] = to_string(verdict.failure->clause);
      failure["detail"] = verdict.failure->detail;
      if (verdict.failure->subset) {
        nlohmann::json subset = nlohmann::json::array();
        for (const PrimitiveEvent& ev : *verdict.failure->subset) {
          subset.push_back(dsl::serialize_event(model, ev));
        }
        failure["subset"] = subset;
        failure["subset_witness"] = witness_json(model, *verdict.failure->subset_witness);
      }
      j["failed_clause"] = failure;
      break;
    }
    case Outcome::BudgetExceeded:
      j["budget_exceeded"] = true;
      break;
  }
  return j;
}

nlohmann::json path_verdict_json(const CausalModel& model, const PathVerdict& verdict,
                                 const std::string& query_text, const std::string& variant) {
  nlohmann::json j;
  j["schema"] = "causecheck.verdict/1";
  j["query"] = query_text;
  j["variant"] = variant;
  j["elapsed"] = 0.0;
  if (verdict.budget_exceeded) {
    j["budget_exceeded"] = true;
    return j;
  }
  j["is_cause"] = verdict.is_cause;
  if (verdict.is_cause) {
    if (verdict.witness) {
      j["witness"] = witness_json(model, *verdict.witness);
    }
    if (verdict.path) {
      nlohmann::json path = nlohmann::json::array();
      for (VarId v : *verdict.path) {
        path.push_back(model.variable(v).name);
      }
      j["path"] = path;
    }
  } else {
    nlohmann::json failure;
    failure["clause"] = "AC2";
    failure["detail"] = verdict.detail;
    j["failed_clause"] = failure;
  }
  return j;
}

}  // namespace causal::json_io
