#include <doctest.h>

#include "causal/dsl.hpp"
#include "causal/json_io.hpp"

using namespace causal;

namespace {

struct Scenario {
  CausalModel model;
  Assignment context;
};

Scenario rock() {
  for (const corpus::Fixture& f : corpus::builtin_fixtures()) {
    if (f.name != "rock_throwing") continue;
    auto model = dsl::parse_model(f.model_text);
    REQUIRE(model.ok());
    auto ctx = dsl::parse_context(f.context_text, *model.value);
    REQUIRE(ctx.ok());
    return Scenario{std::move(*model.value), std::move(*ctx.value)};
  }
  throw std::logic_error("fixture missing");
}

}  // namespace

TEST_CASE("true verdicts carry query, variant, is_cause, witness, elapsed") {
  Scenario s = rock();
  CauseCandidate st = CauseCandidate::make(s.model, {make_event(s.model, "ST", "1")});
  BoolFormula shattered = BoolFormula::event(make_event(s.model, "BS", "1"));
  CauseVerdict v = is_cause(s.model, s.context, st, shattered, Variant::Modified);
  nlohmann::json j = json_io::verdict_json(s.model, v, "q");

  CHECK(j["schema"] == "causecheck.verdict/1");
  CHECK(j["query"] == "q");
  CHECK(j["variant"] == "modified");
  CHECK(j["is_cause"] == true);
  CHECK(j["elapsed"].is_number());
  CHECK(j["witness"]["w"] == nlohmann::json({{"BH", "0"}}));
  CHECK(j["witness"]["x_prime"] == nlohmann::json({{"ST", "0"}}));
  CHECK_FALSE(j.contains("failed_clause"));
  CHECK_FALSE(j.contains("budget_exceeded"));
}

TEST_CASE("false verdicts carry the failed clause") {
  Scenario s = rock();
  CauseCandidate bt = CauseCandidate::make(s.model, {make_event(s.model, "BT", "1")});
  BoolFormula shattered = BoolFormula::event(make_event(s.model, "BS", "1"));
  CauseVerdict v = is_cause(s.model, s.context, bt, shattered, Variant::Modified);
  nlohmann::json j = json_io::verdict_json(s.model, v, "q");

  CHECK(j["is_cause"] == false);
  CHECK(j["failed_clause"]["clause"] == "AC2");
  CHECK(j["failed_clause"]["detail"].is_string());
  CHECK_FALSE(j.contains("witness"));
}

TEST_CASE("AC3 failures expose the offending subset") {
  Scenario s = rock();
  CauseCandidate both = CauseCandidate::make(
      s.model, {make_event(s.model, "ST", "1"), make_event(s.model, "BT", "1")});
  BoolFormula shattered = BoolFormula::event(make_event(s.model, "BS", "1"));
  CauseVerdict v = is_cause(s.model, s.context, both, shattered, Variant::Modified);
  nlohmann::json j = json_io::verdict_json(s.model, v, "q");

  CHECK(j["failed_clause"]["clause"] == "AC3");
  CHECK(j["failed_clause"]["subset"] == nlohmann::json::array({"ST=1"}));
  CHECK(j["failed_clause"]["subset_witness"].is_object());
}

TEST_CASE("budget verdicts carry only the budget marker") {
  Scenario s = rock();
  CauseVerdict v{CauseCandidate::make(s.model, {make_event(s.model, "ST", "1")}),
                 BoolFormula::event(make_event(s.model, "BS", "1")),
                 Variant::Updated,
                 Outcome::BudgetExceeded,
                 std::nullopt,
                 std::nullopt,
                 0.0};
  nlohmann::json j = json_io::verdict_json(s.model, v, "q");
  CHECK(j["budget_exceeded"] == true);
  CHECK_FALSE(j.contains("is_cause"));
}

TEST_CASE("assignments render as name-to-value objects") {
  Scenario s = rock();
  Assignment sol = s.model.solve(s.context);
  nlohmann::json j = json_io::assignment_json(s.model, sol);
  CHECK(j["ST"] == "1");
  CHECK(j["BH"] == "0");
  CHECK(j.size() == s.model.var_count());
}
