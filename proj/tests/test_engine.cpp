#include <doctest.h>

#include <thread>

#include "causal/corpus.hpp"
#include "causal/dsl.hpp"
#include "causal/engine.hpp"

using namespace causal;

namespace {

struct Scenario {
  CausalModel model;
  Assignment context;
};

Scenario load(const std::string& fixture_name) {
  for (const corpus::Fixture& f : corpus::builtin_fixtures()) {
    if (f.name != fixture_name) continue;
    auto model = dsl::parse_model(f.model_text);
    REQUIRE(model.ok());
    auto ctx = dsl::parse_context(f.context_text, *model.value);
    REQUIRE(ctx.ok());
    return Scenario{std::move(*model.value), std::move(*ctx.value)};
  }
  FAIL("unknown fixture ", fixture_name);
  throw std::logic_error("unreachable");
}

CauseCandidate cand(const CausalModel& m, std::initializer_list<const char*> events) {
  std::vector<PrimitiveEvent> evs;
  for (const char* text : events) {
    std::string s(text);
    auto eq = s.find('=');
    evs.push_back(make_event(m, s.substr(0, eq), s.substr(eq + 1)));
  }
  return CauseCandidate::make(m, std::move(evs));
}

BoolFormula effect(const CausalModel& m, const char* text) {
  std::string s(text);
  auto eq = s.find('=');
  return BoolFormula::event(make_event(m, s.substr(0, eq), s.substr(eq + 1)));
}

Witness witness(const CausalModel& m, std::initializer_list<const char*> w,
                std::initializer_list<const char*> x_prime) {
  Witness out;
  for (const char* text : w) {
    std::string s(text);
    auto eq = s.find('=');
    PrimitiveEvent ev = make_event(m, s.substr(0, eq), s.substr(eq + 1));
    out.w.emplace_back(ev.var, ev.value);
  }
  for (const char* text : x_prime) {
    std::string s(text);
    auto eq = s.find('=');
    PrimitiveEvent ev = make_event(m, s.substr(0, eq), s.substr(eq + 1));
    out.x_prime.emplace_back(ev.var, ev.value);
  }
  return out;
}

}  // namespace

TEST_CASE("check_ac1 matches the actual world") {
  Scenario fire = load("forest_fire_disjunctive");
  CHECK(check_ac1(fire.model, fire.context, cand(fire.model, {"L=1"}),
                  effect(fire.model, "F=1")));

  Scenario rock = load("rock_throwing");
  CHECK_FALSE(check_ac1(rock.model, rock.context, cand(rock.model, {"BT=0"}),
                        effect(rock.model, "BS=1")));

  Scenario prisoner = load("prisoner");
  CHECK(check_ac1(prisoner.model, prisoner.context, cand(prisoner.model, {"C=1"}),
                  effect(prisoner.model, "D=1")));
}

TEST_CASE("check_ac2a covers the necessity clause") {
  Scenario fire = load("forest_fire_disjunctive");
  CHECK(check_ac2a(fire.model, fire.context, cand(fire.model, {"L=1"}),
                   effect(fire.model, "F=1"), witness(fire.model, {"MD=0"}, {"L=0"})));

  Scenario rock = load("rock_throwing");
  CHECK(check_ac2a(rock.model, rock.context, cand(rock.model, {"ST=1"}),
                   effect(rock.model, "BS=1"), witness(rock.model, {"BT=0"}, {"ST=0"})));
  CHECK_FALSE(check_ac2a(rock.model, rock.context, cand(rock.model, {"BT=1"}),
                         effect(rock.model, "BS=1"), witness(rock.model, {}, {"BT=0"})));
}

TEST_CASE("check_ac2b quantifies over actual-value freezes") {
  Scenario rock = load("rock_throwing");
  std::string cex;
  CHECK_FALSE(check_ac2b(rock.model, rock.context, cand(rock.model, {"BT=1"}),
                         effect(rock.model, "BS=1"), witness(rock.model, {"ST=0"}, {"BT=0"}),
                         &cex));
  CHECK(cex.find("BH") != std::string::npos);

  Scenario prisoner = load("prisoner");
  CHECK(check_ac2b(prisoner.model, prisoner.context, cand(prisoner.model, {"A=1"}),
                   effect(prisoner.model, "D=1"),
                   witness(prisoner.model, {"B=1", "C=0"}, {"A=0"})));

  // W empty and the candidate at its actual value: nothing changes.
  Scenario fire = load("forest_fire_disjunctive");
  CHECK(check_ac2b(fire.model, fire.context, cand(fire.model, {"L=1"}),
                   effect(fire.model, "F=1"), witness(fire.model, {}, {"L=0"})));
}

TEST_CASE("check_ac2bu strengthens AC2(b) over witness subsets") {
  Scenario prisoner = load("prisoner");
  std::string cex;
  CHECK_FALSE(check_ac2bu(prisoner.model, prisoner.context, cand(prisoner.model, {"A=1"}),
                          effect(prisoner.model, "D=1"),
                          witness(prisoner.model, {"B=1", "C=0"}, {"A=0"}), &cex));
  CHECK(cex.find("C=0") != std::string::npos);

  // With W empty the two sufficiency clauses coincide.
  Scenario fire = load("forest_fire_disjunctive");
  Witness w = witness(fire.model, {}, {"L=0"});
  CHECK(check_ac2b(fire.model, fire.context, cand(fire.model, {"L=1"}),
                   effect(fire.model, "F=1"), w) ==
        check_ac2bu(fire.model, fire.context, cand(fire.model, {"L=1"}),
                    effect(fire.model, "F=1"), w));

  Scenario rock = load("rock_throwing");
  CHECK(check_ac2bu(rock.model, rock.context, cand(rock.model, {"ST=1"}),
                    effect(rock.model, "BS=1"), witness(rock.model, {"BT=0"}, {"ST=0"})));
}

TEST_CASE("check_ac2am freezes the witness set at actual values") {
  Scenario rock = load("rock_throwing");
  CHECK(check_ac2am(rock.model, rock.context, cand(rock.model, {"ST=1"}),
                    effect(rock.model, "BS=1"), {*rock.model.find("BH")},
                    {{*rock.model.find("ST"), 0}}));

  Scenario fire = load("forest_fire_disjunctive");
  VarId md = *fire.model.find("MD"), f = *fire.model.find("F"), l = *fire.model.find("L");
  for (const std::vector<VarId>& w : std::vector<std::vector<VarId>>{{}, {md}, {f}, {md, f}}) {
    CHECK_FALSE(check_ac2am(fire.model, fire.context, cand(fire.model, {"L=1"}),
                            effect(fire.model, "F=1"), w, {{l, 0}}));
  }

  Scenario bogus = load("bogus_prevention");
  VarId poison = *bogus.model.find("Poison");
  VarId survives = *bogus.model.find("Survives");
  VarId antidote = *bogus.model.find("Antidote");
  for (const std::vector<VarId>& w :
       std::vector<std::vector<VarId>>{{}, {poison}, {survives}, {poison, survives}}) {
    CHECK_FALSE(check_ac2am(bogus.model, bogus.context, cand(bogus.model, {"Antidote=1"}),
                            effect(bogus.model, "Survives=1"), w, {{antidote, 0}}));
  }
}

TEST_CASE("find_witness returns the canonical smallest witness") {
  Scenario rock = load("rock_throwing");
  auto w = find_witness(rock.model, rock.context, cand(rock.model, {"ST=1"}),
                        effect(rock.model, "BS=1"), Variant::Modified);
  REQUIRE(w.has_value());
  REQUIRE(w->w.size() == 1);
  CHECK(w->w[0].first == *rock.model.find("BH"));
  CHECK(w->w[0].second == 0);
  REQUIRE(w->x_prime.size() == 1);
  CHECK(w->x_prime[0].second == 0);

  Scenario fire = load("forest_fire_conjunctive");
  auto empty_w = find_witness(fire.model, fire.context, cand(fire.model, {"L=1"}),
                              effect(fire.model, "F=1"), Variant::Modified);
  REQUIRE(empty_w.has_value());
  CHECK(empty_w->w.empty());
  CHECK(empty_w->x_prime[0].second == 0);

  Scenario prisoner = load("prisoner");
  auto orig = find_witness(prisoner.model, prisoner.context, cand(prisoner.model, {"A=1"}),
                           effect(prisoner.model, "D=1"), Variant::Original);
  REQUIRE(orig.has_value());
  bool b_is_one = false;
  for (const auto& [var, value] : orig->w) {
    if (var == *prisoner.model.find("B")) b_is_one = value == 1;
  }
  CHECK(b_is_one);
}

TEST_CASE("check_ac3 prunes supersets of causes") {
  Scenario fire = load("forest_fire_disjunctive");
  CHECK(check_ac3(fire.model, fire.context, cand(fire.model, {"L=1", "MD=1"}),
                  effect(fire.model, "F=1"), Variant::Modified));
  CHECK(check_ac3(fire.model, fire.context, cand(fire.model, {"L=1"}),
                  effect(fire.model, "F=1"), Variant::Modified));  // vacuous

  Scenario rock = load("rock_throwing");
  ClauseFailure failure;
  CHECK_FALSE(check_ac3(rock.model, rock.context, cand(rock.model, {"ST=1", "BT=1"}),
                        effect(rock.model, "BS=1"), Variant::Modified, {}, &failure));
  REQUIRE(failure.subset.has_value());
  REQUIRE(failure.subset->size() == 1);
  CHECK(failure.subset->front().var == *rock.model.find("ST"));
}

TEST_CASE("is_cause assembles the variants") {
  Scenario rock = load("rock_throwing");
  CHECK(is_cause(rock.model, rock.context, cand(rock.model, {"ST=1"}),
                 effect(rock.model, "BS=1"), Variant::Modified)
            .is_cause());
  CauseVerdict bt = is_cause(rock.model, rock.context, cand(rock.model, {"BT=1"}),
                             effect(rock.model, "BS=1"), Variant::Modified);
  CHECK_FALSE(bt.is_cause());
  CHECK(bt.failure->clause == Clause::AC2);

  Scenario prisoner = load("prisoner");
  CHECK(is_cause(prisoner.model, prisoner.context, cand(prisoner.model, {"A=1"}),
                 effect(prisoner.model, "D=1"), Variant::Original)
            .is_cause());
  CHECK_FALSE(is_cause(prisoner.model, prisoner.context, cand(prisoner.model, {"A=1"}),
                       effect(prisoner.model, "D=1"), Variant::Updated)
                  .is_cause());
  CHECK_FALSE(is_cause(prisoner.model, prisoner.context, cand(prisoner.model, {"A=1"}),
                       effect(prisoner.model, "D=1"), Variant::Modified)
                  .is_cause());

  Scenario lamp = load("weslake_lamp");
  CHECK_FALSE(is_cause(lamp.model, lamp.context, cand(lamp.model, {"A=1"}),
                       effect(lamp.model, "L=1"), Variant::Modified)
                  .is_cause());
  CHECK(is_cause(lamp.model, lamp.context, cand(lamp.model, {"B=-1"}),
                 effect(lamp.model, "L=1"), Variant::Modified)
            .is_cause());
  CHECK(is_cause(lamp.model, lamp.context, cand(lamp.model, {"C=-1"}),
                 effect(lamp.model, "L=1"), Variant::Modified)
            .is_cause());
}

TEST_CASE("AC1 failures name the failing side") {
  Scenario rock = load("rock_throwing");
  CauseVerdict v = is_cause(rock.model, rock.context, cand(rock.model, {"BT=0"}),
                            effect(rock.model, "BS=1"), Variant::Modified);
  CHECK_FALSE(v.is_cause());
  CHECK(v.failure->clause == Clause::AC1);

  CauseVerdict w = is_cause(rock.model, rock.context, cand(rock.model, {"BT=1"}),
                            effect(rock.model, "BS=0"), Variant::Modified);
  CHECK(w.failure->clause == Clause::AC1);
}

TEST_CASE("but-for requires singleton candidates") {
  Scenario fire = load("forest_fire_disjunctive");
  CHECK_THROWS_AS(is_cause(fire.model, fire.context, cand(fire.model, {"L=1", "MD=1"}),
                           effect(fire.model, "F=1"), Variant::ButFor),
                  std::invalid_argument);
}

TEST_CASE("find_causes enumerates canonical minimal causes") {
  Scenario fire = load("forest_fire_disjunctive");
  auto causes = find_causes(fire.model, fire.context, effect(fire.model, "F=1"),
                            Variant::Modified, 2);
  REQUIRE(causes.size() == 1);
  CHECK(dsl::serialize_candidate(fire.model, causes[0].candidate) == "L=1 & MD=1");

  Scenario conj = load("forest_fire_conjunctive");
  auto each = find_causes(conj.model, conj.context, effect(conj.model, "F=1"),
                          Variant::Modified, 2);
  REQUIRE(each.size() == 2);
  CHECK(dsl::serialize_candidate(conj.model, each[0].candidate) == "L=1");
  CHECK(dsl::serialize_candidate(conj.model, each[1].candidate) == "MD=1");

  Scenario redux = load("fire_redux");
  auto singles = find_causes(redux.model, redux.context, effect(redux.model, "F=1"),
                             Variant::Modified, 1);
  bool has_l = false, has_md = false;
  for (const CauseVerdict& v : singles) {
    std::string s = dsl::serialize_candidate(redux.model, v.candidate);
    has_l = has_l || s == "L=1";
    has_md = has_md || s == "MD=1";
  }
  CHECK(has_l);
  CHECK(has_md);
}

TEST_CASE("is_part_of_cause finds containing causes") {
  Scenario fire = load("forest_fire_disjunctive");
  PartOfCauseResult part = is_part_of_cause(fire.model, fire.context,
                                            make_event(fire.model, "L", "1"),
                                            effect(fire.model, "F=1"));
  CHECK(part.is_part);
  REQUIRE(part.containing_cause.has_value());
  CHECK(dsl::serialize_candidate(fire.model, part.containing_cause->candidate) ==
        "L=1 & MD=1");

  Scenario bogus = load("bogus_prevention");
  CHECK(is_part_of_cause(bogus.model, bogus.context,
                         make_event(bogus.model, "Antidote", "1"),
                         effect(bogus.model, "Survives=1"))
            .is_part);

  Scenario rock = load("rock_throwing");
  CHECK_FALSE(is_part_of_cause(rock.model, rock.context, make_event(rock.model, "BT", "1"),
                               effect(rock.model, "BS=1"))
                  .is_part);
}

TEST_CASE("verdict witnesses re-check through the primitive clauses") {
  for (const corpus::Fixture& fixture : corpus::builtin_fixtures()) {
    auto model = dsl::parse_model(fixture.model_text);
    REQUIRE(model.ok());
    const CausalModel& m = *model.value;
    for (const corpus::GoldenCheck& check : fixture.checks) {
      auto q = dsl::parse_query(check.query, m);
      REQUIRE(q.ok());
      if (q.value->kind != dsl::Query::Kind::Cause) continue;
      auto variant = dsl::hp_variant(*q.value->definition);
      if (!variant || *variant == Variant::ButFor) continue;
      CauseVerdict v = is_cause(m, q.value->context, *q.value->candidate, *q.value->effect,
                                *variant);
      if (!v.is_cause()) continue;
      const Witness& w = *v.witness;
      CHECK(check_ac1(m, q.value->context, v.candidate, v.effect));
      if (*variant == Variant::Modified) {
        std::vector<VarId> w_set;
        for (const auto& [var, value] : w.w) {
          w_set.push_back(var);
          // The modified definition freezes W at its actual values.
          CHECK(m.solve(q.value->context).get(var) == value);
        }
        CHECK(check_ac2am(m, q.value->context, v.candidate, v.effect, w_set, w.x_prime));
      } else {
        CHECK(check_ac2a(m, q.value->context, v.candidate, v.effect, w));
        if (*variant == Variant::Original) {
          CHECK(check_ac2b(m, q.value->context, v.candidate, v.effect, w));
        } else {
          CHECK(check_ac2bu(m, q.value->context, v.candidate, v.effect, w));
        }
      }
      CHECK(check_ac3(m, q.value->context, v.candidate, v.effect, *variant));
    }
  }
}

TEST_CASE("budget exhaustion is reported distinctly") {
  Scenario votes = load("plurality_vote");
  SearchOptions opts;
  opts.budget = std::chrono::milliseconds(0);
  PartOfCauseResult part = is_part_of_cause(votes.model, votes.context,
                                            make_event(votes.model, "V1", "A"),
                                            effect(votes.model, "O=A"), Variant::Modified,
                                            opts);
  CHECK(part.budget_exceeded);
  CHECK_FALSE(part.is_part);

  CauseVerdict v = is_cause(votes.model, votes.context, cand(votes.model, {"V6=B"}),
                            effect(votes.model, "O=A"), Variant::Updated, opts);
  CHECK(v.outcome == Outcome::BudgetExceeded);
  CHECK_FALSE(v.witness.has_value());
  CHECK_FALSE(v.failure.has_value());
}

TEST_CASE("verdicts are identical across concurrent callers") {
  Scenario rock = load("rock_throwing");
  auto run_one = [&]() {
    return is_cause(rock.model, rock.context, cand(rock.model, {"ST=1"}),
                    effect(rock.model, "BS=1"), Variant::Updated);
  };
  CauseVerdict reference = run_one();
  std::vector<std::thread> workers;
  std::vector<CauseVerdict> results(4, reference);
  for (int i = 0; i < 4; ++i) {
    workers.emplace_back([&, i] { results[static_cast<std::size_t>(i)] = run_one(); });
  }
  for (std::thread& t : workers) t.join();
  for (const CauseVerdict& v : results) {
    CHECK(v.outcome == reference.outcome);
    CHECK(v.witness == reference.witness);
  }
}

TEST_CASE("generated-model sanity: fan-in zero means constants") {
  corpus::GeneratorParams params;
  params.seed = 5;
  params.max_fan_in = 0;
  corpus::GeneratedModel gen = corpus::random_model(params);
  for (VarId v : gen.model.endogenous()) {
    CHECK(gen.model.equation(v).op() == ExprOp::Constant);
  }
}
