#include "causal/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "causal/json_io.hpp"
#include "causal/reductions.hpp"

namespace causal::cli {

namespace {

struct Paint {
  bool on = false;

  std::string good(const std::string& s) const {
    return on ? "\x1b[32m" + s + "\x1b[0m" : s;
  }
  std::string bad(const std::string& s) const {
    return on ? "\x1b[31m" + s + "\x1b[0m" : s;
  }
};

bool read_input(const std::string& path, std::string& text, std::string& error) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = "cannot open '" + path + "'";
    return false;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  text = buffer.str();
  return true;
}

void print_diagnostics(const std::string& file, const std::vector<dsl::Diagnostic>& diags,
                       std::ostream& err) {
  for (const dsl::Diagnostic& d : diags) {
    err << file << ":" << dsl::format(d) << "\n";
  }
}

std::optional<CausalModel> load_model(const std::string& file, int max_vars, std::ostream& err) {
  std::string text, io_error;
  if (!read_input(file, text, io_error)) {
    err << io_error << "\n";
    return std::nullopt;
  }
  ModelLimits limits;
  limits.max_variables = max_vars;
  auto parsed = dsl::parse_model(text, limits);
  if (!parsed.ok()) {
    print_diagnostics(file, parsed.diagnostics, err);
    return std::nullopt;
  }
  return std::move(parsed.value);
}

SearchOptions search_options(int budget_ms) {
  SearchOptions opts;
  if (budget_ms >= 0) {
    opts.budget = std::chrono::milliseconds(budget_ms);
  }
  return opts;
}

std::string path_text(const CausalModel& model, const CausalPath& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += " -> ";
    out += model.variable(path[i]).name;
  }
  return out;
}

int verdict_exit(const CauseVerdict& verdict) {
  switch (verdict.outcome) {
    case Outcome::Cause: return kExitOk;
    case Outcome::NotCause: return kExitFalse;
    case Outcome::BudgetExceeded: return kExitBudget;
  }
  return kExitOk;
}

void print_cause_verdict(const CausalModel& model, const CauseVerdict& verdict,
                         std::ostream& out, const Paint& paint) {
  std::string text = dsl::serialize_verdict(model, verdict);
  if (paint.on) {
    if (text.rfind("TRUE", 0) == 0) {
      text = paint.good("TRUE") + text.substr(4);
    } else if (text.rfind("FALSE", 0) == 0) {
      text = paint.bad("FALSE") + text.substr(5);
    }
  }
  out << text;
}

// Runs a parsed query and prints it; shared by `cause` and query files.
int execute_query(const CausalModel& model, const dsl::Query& query, int budget_ms,
                  const std::string& format, std::ostream& out, std::ostream& err,
                  const Paint& paint) {
  std::string query_text = dsl::serialize_query(model, query);
  switch (query.kind) {
    case dsl::Query::Kind::Cause: {
      if (auto variant = dsl::hp_variant(*query.definition)) {
        CauseVerdict verdict = is_cause(model, query.context, *query.candidate, *query.effect,
                                        *variant, search_options(budget_ms));
        if (format == "json") {
          out << json_io::verdict_json(model, verdict, query_text).dump(2) << "\n";
        } else {
          print_cause_verdict(model, verdict, out, paint);
        }
        return verdict_exit(verdict);
      }
      if (query.candidate->size() != 1 || query.effect->kind() != BoolFormula::Kind::Event) {
        err << "the " << to_string(*query.definition)
            << " definition needs a single event on both sides of 'of'\n";
        return kExitUsage;
      }
      const PrimitiveEvent& cause_event = query.candidate->events()[0];
      const PrimitiveEvent& effect_event = query.effect->as_event();
      PathVerdict verdict =
          (*query.definition == dsl::Definition::Hitchcock)
              ? hitchcock_cause(model, query.context, cause_event, effect_event)
              : h_account_cause(model, query.context, cause_event, effect_event,
                                search_options(budget_ms));
      if (format == "json") {
        out << json_io::path_verdict_json(model, verdict, query_text,
                                          to_string(*query.definition))
                   .dump(2)
            << "\n";
      } else {
        std::string candidate = dsl::serialize_candidate(model, *query.candidate);
        std::string effect = dsl::serialize_formula(model, *query.effect);
        if (verdict.budget_exceeded) {
          out << "BUDGET EXCEEDED: " << candidate << " of " << effect << " ("
              << to_string(*query.definition) << ") was not decided\n";
        } else if (verdict.is_cause) {
          out << paint.good("TRUE") << ": " << candidate << " is a cause of " << effect << " ("
              << to_string(*query.definition) << ")\n";
          if (verdict.path) {
            out << "  path: " << path_text(model, *verdict.path) << "\n";
          }
          if (verdict.witness) {
            out << "  witness: " << dsl::serialize_witness(model, *verdict.witness) << "\n";
          }
        } else {
          out << paint.bad("FALSE") << ": " << candidate << " is not a cause of " << effect
              << " (" << to_string(*query.definition) << ")\n";
          out << "  " << verdict.detail << "\n";
        }
      }
      if (verdict.budget_exceeded) return kExitBudget;
      return verdict.is_cause ? kExitOk : kExitFalse;
    }
    case dsl::Query::Kind::PartOf: {
      auto variant = dsl::hp_variant(*query.definition);
      PartOfCauseResult part =
          is_part_of_cause(model, query.context, query.candidate->events()[0], *query.effect,
                           *variant, search_options(budget_ms));
      std::string candidate = dsl::serialize_candidate(model, *query.candidate);
      std::string effect = dsl::serialize_formula(model, *query.effect);
      if (format == "json") {
        nlohmann::json j;
        j["schema"] = "causecheck.partof/1";
        j["query"] = query_text;
        j["variant"] = to_string(*variant);
        if (part.budget_exceeded) {
          j["budget_exceeded"] = true;
        } else {
          j["is_part_of_cause"] = part.is_part;
          if (part.containing_cause) {
            j["containing_cause"] =
                dsl::serialize_candidate(model, part.containing_cause->candidate);
            j["witness"] = json_io::witness_json(model, *part.containing_cause->witness);
          }
        }
        out << j.dump(2) << "\n";
      } else if (part.budget_exceeded) {
        out << "BUDGET EXCEEDED: " << query_text << " was not decided\n";
      } else if (part.is_part) {
        out << paint.good("TRUE") << ": " << candidate << " is part of a cause of " << effect
            << "\n";
        out << "  containing cause: "
            << dsl::serialize_candidate(model, part.containing_cause->candidate) << "\n";
        out << "  witness: " << dsl::serialize_witness(model, *part.containing_cause->witness)
            << "\n";
      } else {
        out << paint.bad("FALSE") << ": " << candidate << " is not part of any cause of "
            << effect << "\n";
      }
      if (part.budget_exceeded) return kExitBudget;
      return part.is_part ? kExitOk : kExitFalse;
    }
    case dsl::Query::Kind::Causes: {
      auto variant = dsl::hp_variant(*query.definition);
      std::vector<CauseVerdict> causes;
      try {
        causes = find_causes(model, query.context, *query.effect, *variant, query.max_size,
                             search_options(budget_ms));
      } catch (const BudgetExceededError&) {
        if (format == "json") {
          nlohmann::json j;
          j["schema"] = "causecheck.causes/1";
          j["query"] = query_text;
          j["budget_exceeded"] = true;
          out << j.dump(2) << "\n";
        } else {
          out << "BUDGET EXCEEDED: enumeration was not completed\n";
        }
        return kExitBudget;
      }
      if (format == "json") {
        nlohmann::json j;
        j["schema"] = "causecheck.causes/1";
        j["query"] = query_text;
        j["variant"] = to_string(*variant);
        j["max_size"] = query.max_size;
        nlohmann::json list = nlohmann::json::array();
        for (const CauseVerdict& v : causes) {
          list.push_back(json_io::verdict_json(model, v, query_text));
        }
        j["causes"] = list;
        out << j.dump(2) << "\n";
      } else {
        std::string effect = dsl::serialize_formula(model, *query.effect);
        out << causes.size() << " cause" << (causes.size() == 1 ? "" : "s") << " of " << effect
            << " (" << to_string(*variant) << ", max size " << query.max_size << ")\n";
        for (const CauseVerdict& v : causes) {
          out << "  " << dsl::serialize_candidate(model, v.candidate) << "  [witness: "
              << dsl::serialize_witness(model, *v.witness) << "]\n";
        }
      }
      return kExitOk;
    }
    case dsl::Query::Kind::Compare: {
      nlohmann::json results = nlohmann::json::array();
      if (format != "json") {
        out << "comparing definitions for " << dsl::serialize_candidate(model, *query.candidate)
            << " of " << dsl::serialize_formula(model, *query.effect) << "\n";
      }
      auto report = [&](const std::string& name, const std::string& text,
                        const nlohmann::json& j) {
        if (format == "json") {
          results.push_back(j);
        } else {
          out << "  " << name << std::string(name.size() < 10 ? 10 - name.size() : 1, ' ')
              << text << "\n";
        }
      };
      for (dsl::Definition def :
           {dsl::Definition::ButFor, dsl::Definition::Original, dsl::Definition::Updated,
            dsl::Definition::Modified, dsl::Definition::HAccount, dsl::Definition::Hitchcock}) {
        std::string name = to_string(def);
        bool singleton = query.candidate->size() == 1;
        bool event_effect = query.effect->kind() == BoolFormula::Kind::Event;
        if (def == dsl::Definition::ButFor && !singleton) {
          report(name, "n/a (single conjuncts only)",
                 {{"variant", name}, {"applicable", false}});
          continue;
        }
        if ((def == dsl::Definition::HAccount || def == dsl::Definition::Hitchcock) &&
            (!singleton || !event_effect)) {
          report(name, "n/a (single events only)", {{"variant", name}, {"applicable", false}});
          continue;
        }
        if (auto variant = dsl::hp_variant(def)) {
          CauseVerdict verdict = is_cause(model, query.context, *query.candidate, *query.effect,
                                          *variant, search_options(budget_ms));
          std::string text;
          switch (verdict.outcome) {
            case Outcome::Cause:
              text = paint.good("true") + "   witness: " +
                     dsl::serialize_witness(model, *verdict.witness);
              break;
            case Outcome::NotCause:
              text = paint.bad("false") + "  (" + to_string(verdict.failure->clause) + ": " +
                     verdict.failure->detail + ")";
              break;
            case Outcome::BudgetExceeded:
              text = "budget exceeded";
              break;
          }
          report(name, text, json_io::verdict_json(model, verdict, query_text));
        } else {
          const PrimitiveEvent& cause_event = query.candidate->events()[0];
          const PrimitiveEvent& effect_event = query.effect->as_event();
          PathVerdict verdict = (def == dsl::Definition::Hitchcock)
                                    ? hitchcock_cause(model, query.context, cause_event,
                                                      effect_event)
                                    : h_account_cause(model, query.context, cause_event,
                                                      effect_event, search_options(budget_ms));
          std::string text;
          if (verdict.budget_exceeded) {
            text = "budget exceeded";
          } else if (verdict.is_cause) {
            text = paint.good("true");
            if (verdict.path) {
              text += "   path: " + path_text(model, *verdict.path);
            }
          } else {
            text = paint.bad("false") + "  (" + verdict.detail + ")";
          }
          report(name, text, json_io::path_verdict_json(model, verdict, query_text, name));
        }
      }
      if (format == "json") {
        nlohmann::json j;
        j["schema"] = "causecheck.compare/1";
        j["query"] = query_text;
        j["results"] = results;
        out << j.dump(2) << "\n";
      }
      return kExitOk;
    }
  }
  return kExitUsage;
}

// --- fuzz harnesses ---

int fuzz_properties(std::uint64_t seed, int count, std::ostream& out) {
  int violations = 0;
  for (int i = 0; i < count; ++i) {
    corpus::GeneratorParams params;
    params.seed = seed + static_cast<std::uint64_t>(i);
    corpus::GeneratedModel gen = corpus::random_model(params);
    const CausalModel& model = gen.model;
    Assignment actual = model.solve(gen.context);

    auto complain = [&](const std::string& what) {
      ++violations;
      out << "violation (seed " << params.seed << "): " << what << "\n";
    };

    for (VarId y : model.endogenous()) {
      BoolFormula effect = BoolFormula::event(model, y, actual.get(y));
      std::string effect_name = model.variable(y).name;

      for (VarId x : model.endogenous()) {
        if (x == y) continue;
        CauseCandidate candidate =
            CauseCandidate::make(model, {PrimitiveEvent{x, actual.get(x)}});
        CauseVerdict butfor = is_cause(model, gen.context, candidate, effect, Variant::ButFor);
        if (butfor.is_cause()) {
          for (Variant v : {Variant::Original, Variant::Updated, Variant::Modified}) {
            if (!is_cause(model, gen.context, candidate, effect, v).is_cause()) {
              complain("but-for cause of " + effect_name + " rejected by " + to_string(v));
            }
          }
        }
        auto witness = find_witness(model, gen.context, candidate, effect, Variant::Modified);
        if (witness && !check_ac2bu(model, gen.context, candidate, effect, *witness)) {
          complain("modified witness fails AC2(b^u) for effect " + effect_name);
        }
      }

      int max_size = static_cast<int>(model.endogenous().size());
      for (const CauseVerdict& cause :
           find_causes(model, gen.context, effect, Variant::Modified, max_size)) {
        for (const PrimitiveEvent& ev : cause.candidate.events()) {
          CauseCandidate part = CauseCandidate::make(model, {ev});
          for (Variant v : {Variant::Original, Variant::Updated}) {
            if (!is_cause(model, gen.context, part, effect, v).is_cause()) {
              complain("part of a modified cause of " + effect_name + " rejected by " +
                       to_string(v));
            }
          }
        }
      }
      for (const CauseVerdict& cause :
           find_causes(model, gen.context, effect, Variant::Original, max_size)) {
        if (cause.candidate.size() != 1) {
          complain("original-definition cause of " + effect_name + " has " +
                   std::to_string(cause.candidate.size()) + " conjuncts");
        }
      }
    }
  }
  out << "checked " << count << " random models, " << violations << " violations\n";
  return violations == 0 ? kExitOk : kExitFalse;
}

int fuzz_reductions(std::uint64_t seed, int count, std::ostream& out) {
  int mismatches = 0;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    int props = 1 + static_cast<int>(rng() % 8);
    PropFormula phi = random_prop_formula(rng, props, 4);
    bool expected_sat = brute_force_sat(phi);

    ReductionInstance sat = sat_model(phi);
    bool got_sat = check_ac1(sat.model, sat.context, sat.candidate, sat.effect) &&
                   find_witness(sat.model, sat.context, sat.candidate, sat.effect,
                                Variant::Modified)
                       .has_value();
    if (got_sat != expected_sat) {
      ++mismatches;
      out << "sat mismatch on " << phi.to_string() << "\n";
    }

    if (phi.max_prop() <= 6) {
      ReductionInstance unsat = unsat_model(phi);
      bool got_unsat = check_ac1(unsat.model, unsat.context, unsat.candidate, unsat.effect) &&
                       check_ac3(unsat.model, unsat.context, unsat.candidate, unsat.effect,
                                 Variant::Modified);
      if (got_unsat != !expected_sat) {
        ++mismatches;
        out << "unsat mismatch on " << phi.to_string() << "\n";
      }
    }
  }
  out << "checked " << count << " random formulas, " << mismatches << " mismatches\n";
  return mismatches == 0 ? kExitOk : kExitFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool use_color) {
  Paint paint{use_color};
  CLI::App app{"Actual-causality checker over finite structural causal models"};
  app.require_subcommand(1);

  std::string file;
  std::string context_text;
  std::string formula_text;
  std::string query_text;
  std::string query_file;
  std::string effect_text;
  std::string definition_name;
  std::string format = "text";
  std::string from_name, to_name;
  std::string dir = "fixtures";
  int budget_ms = -1;  // <0: no budget
  int max_vars = 25;
  int max_size = 0;
  std::uint64_t seed = 1;
  int count = 100;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format (text|json)")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_model_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Model file (.scm-model), or - for stdin")->required();
    sub->add_option("--max-vars", max_vars, "Variable limit for model validation");
  };

  CLI::App* validate = app.add_subcommand("validate", "Parse and validate a model");
  add_model_file(validate);
  add_format(validate);

  CLI::App* solve = app.add_subcommand("solve", "Solve the model in a context");
  add_model_file(solve);
  solve->add_option("--context", context_text, "Context literal, e.g. (U_L=1, U_MD=1)")
      ->required();
  add_format(solve);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a causal formula");
  add_model_file(eval);
  eval->add_option("--context", context_text, "Context literal")->required();
  eval->add_option("--formula", formula_text, "Causal formula, e.g. [MD<-0](F=1)")->required();
  add_format(eval);

  CLI::App* cause = app.add_subcommand("cause", "Decide a single cause query");
  add_model_file(cause);
  cause->add_option("--context", context_text, "Context literal");
  cause->add_option("--query", query_text, "Query fragment: CANDIDATE of EFFECT");
  cause->add_option("--definition", definition_name,
                    "butfor|original|updated|modified|haccount|hitchcock");
  cause->add_option("--query-file", query_file, "Full query file (.scm-query)");
  cause->add_option("--budget-ms", budget_ms, "Per-query search budget in milliseconds");
  add_format(cause);

  CLI::App* causes = app.add_subcommand("causes", "Enumerate all causes of an effect");
  add_model_file(causes);
  causes->add_option("--context", context_text, "Context literal")->required();
  causes->add_option("--effect", effect_text, "Effect formula")->required();
  causes->add_option("--definition", definition_name, "butfor|original|updated|modified")
      ->required();
  causes->add_option("--max-size", max_size, "Largest candidate conjunction");
  causes->add_option("--budget-ms", budget_ms, "Per-query search budget in milliseconds");
  add_format(causes);

  CLI::App* compare = app.add_subcommand("compare", "Run every definition side by side");
  add_model_file(compare);
  compare->add_option("--context", context_text, "Context literal")->required();
  compare->add_option("--query", query_text, "Query fragment: CANDIDATE of EFFECT")->required();
  compare->add_option("--budget-ms", budget_ms, "Per-query search budget in milliseconds");
  add_format(compare);

  CLI::App* paths = app.add_subcommand("paths", "List causal paths between two variables");
  add_model_file(paths);
  paths->add_option("--from", from_name, "Path source variable")->required();
  paths->add_option("--to", to_name, "Path target variable")->required();
  add_format(paths);

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "Built-in fixture corpus");
  CLI::App* corpus_run = corpus_cmd->add_subcommand("run", "Run the golden verdict matrix");
  CLI::App* corpus_list = corpus_cmd->add_subcommand("list", "List fixtures");
  CLI::App* corpus_export = corpus_cmd->add_subcommand("export", "Write fixture files");
  corpus_export->add_option("--dir", dir, "Output directory");
  corpus_cmd->require_subcommand(1);

  CLI::App* fuzz = app.add_subcommand("fuzz", "Randomized property harnesses");
  CLI::App* fuzz_props = fuzz->add_subcommand("properties", "Random-model properties");
  fuzz_props->add_option("--seed", seed, "Base seed");
  fuzz_props->add_option("-n,--models", count, "Number of models");
  CLI::App* fuzz_red = fuzz->add_subcommand("reductions", "SAT/UNSAT reduction equivalence");
  fuzz_red->add_option("--seed", seed, "Base seed");
  fuzz_red->add_option("-n,--formulas", count, "Number of formulas");
  fuzz->require_subcommand(1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) {
      auto model = load_model(file, max_vars, err);
      if (!model) return kExitParse;
      if (format == "json") {
        nlohmann::json j;
        j["schema"] = "causecheck.validate/1";
        j["model"] = model->name();
        j["variables"] = model->var_count();
        j["equations"] = model->endogenous().size();
        out << j.dump(2) << "\n";
      } else {
        out << "ok: model " << model->name() << " (" << model->var_count() << " variables, "
            << model->endogenous().size() << " equations)\n";
      }
      return kExitOk;
    }

    if (solve->parsed()) {
      auto model = load_model(file, max_vars, err);
      if (!model) return kExitParse;
      auto ctx = dsl::parse_context(context_text, *model);
      if (!ctx.ok()) {
        print_diagnostics("--context", ctx.diagnostics, err);
        return kExitParse;
      }
      Assignment solution = model->solve(*ctx.value);
      if (format == "json") {
        nlohmann::json j;
        j["schema"] = "causecheck.solution/1";
        j["model"] = model->name();
        j["context"] = json_io::assignment_json(*model, *ctx.value);
        j["solution"] = json_io::assignment_json(*model, solution);
        out << j.dump(2) << "\n";
      } else {
        for (const Variable& var : model->variables()) {
          VarId v = *model->find(var.name);
          out << var.name << " = "
              << var.domain[static_cast<std::size_t>(solution.get(v))].name << "\n";
        }
      }
      return kExitOk;
    }

    if (eval->parsed()) {
      auto model = load_model(file, max_vars, err);
      if (!model) return kExitParse;
      auto ctx = dsl::parse_context(context_text, *model);
      if (!ctx.ok()) {
        print_diagnostics("--context", ctx.diagnostics, err);
        return kExitParse;
      }
      auto formula = dsl::parse_formula(formula_text, *model);
      if (!formula.ok()) {
        print_diagnostics("--formula", formula.diagnostics, err);
        return kExitParse;
      }
      bool value = holds(*model, *ctx.value, *formula.value);
      if (format == "json") {
        nlohmann::json j;
        j["schema"] = "causecheck.eval/1";
        j["formula"] = dsl::serialize_formula(*model, *formula.value);
        j["holds"] = value;
        out << j.dump(2) << "\n";
      } else {
        out << (value ? "true" : "false") << "\n";
      }
      return value ? kExitOk : kExitFalse;
    }

    if (cause->parsed()) {
      auto model = load_model(file, max_vars, err);
      if (!model) return kExitParse;
      dsl::Query query;
      if (!query_file.empty()) {
        std::string text, io_error;
        if (!read_input(query_file, text, io_error)) {
          err << io_error << "\n";
          return kExitParse;
        }
        auto parsed = dsl::parse_query(text, *model);
        if (!parsed.ok()) {
          print_diagnostics(query_file, parsed.diagnostics, err);
          return kExitParse;
        }
        query = std::move(*parsed.value);
      } else {
        if (context_text.empty() || query_text.empty() || definition_name.empty()) {
          err << "cause needs either --query-file or all of --context, --query, "
                 "--definition\n";
          return kExitUsage;
        }
        auto def = dsl::definition_from_string(definition_name);
        if (!def) {
          err << "unknown definition '" << definition_name
              << "'; expected butfor, original, updated, modified, haccount, or hitchcock\n";
          return kExitUsage;
        }
        auto ctx = dsl::parse_context(context_text, *model);
        if (!ctx.ok()) {
          print_diagnostics("--context", ctx.diagnostics, err);
          return kExitParse;
        }
        auto spec = dsl::parse_cause_spec(query_text, *model);
        if (!spec.ok()) {
          print_diagnostics("--query", spec.diagnostics, err);
          return kExitParse;
        }
        query.kind = dsl::Query::Kind::Cause;
        query.candidate = std::move(spec.value->candidate);
        query.effect = std::move(spec.value->effect);
        query.context = std::move(*ctx.value);
        query.definition = *def;
      }
      return execute_query(*model, query, budget_ms, format, out, err, paint);
    }

    if (causes->parsed()) {
      auto model = load_model(file, max_vars, err);
      if (!model) return kExitParse;
      auto def = dsl::definition_from_string(definition_name);
      if (!def || !dsl::hp_variant(*def)) {
        err << "unknown definition '" << definition_name
            << "'; expected butfor, original, updated, or modified\n";
        return kExitUsage;
      }
      auto ctx = dsl::parse_context(context_text, *model);
      if (!ctx.ok()) {
        print_diagnostics("--context", ctx.diagnostics, err);
        return kExitParse;
      }
      auto effect = dsl::parse_formula(effect_text, *model);
      if (!effect.ok()) {
        print_diagnostics("--effect", effect.diagnostics, err);
        return kExitParse;
      }
      if (!effect.value->prefix().empty()) {
        err << "the effect must be a Boolean formula without an intervention prefix\n";
        return kExitUsage;
      }
      dsl::Query query;
      query.kind = dsl::Query::Kind::Causes;
      query.effect = effect.value->body();
      query.context = std::move(*ctx.value);
      query.definition = *def;
      query.max_size =
          max_size > 0 ? max_size : static_cast<int>(model->endogenous().size());
      return execute_query(*model, query, budget_ms, format, out, err, paint);
    }

    if (compare->parsed()) {
      auto model = load_model(file, max_vars, err);
      if (!model) return kExitParse;
      auto ctx = dsl::parse_context(context_text, *model);
      if (!ctx.ok()) {
        print_diagnostics("--context", ctx.diagnostics, err);
        return kExitParse;
      }
      auto spec = dsl::parse_cause_spec(query_text, *model);
      if (!spec.ok()) {
        print_diagnostics("--query", spec.diagnostics, err);
        return kExitParse;
      }
      dsl::Query query;
      query.kind = dsl::Query::Kind::Compare;
      query.candidate = std::move(spec.value->candidate);
      query.effect = std::move(spec.value->effect);
      query.context = std::move(*ctx.value);
      return execute_query(*model, query, budget_ms, format, out, err, paint);
    }

    if (paths->parsed()) {
      auto model = load_model(file, max_vars, err);
      if (!model) return kExitParse;
      auto from = model->find(from_name);
      auto to = model->find(to_name);
      if (!from || !to) {
        err << "unknown variable '" << (!from ? from_name : to_name) << "'\n";
        return kExitParse;
      }
      std::vector<CausalPath> found = causal_paths(*model, *from, *to);
      if (format == "json") {
        nlohmann::json j;
        j["schema"] = "causecheck.paths/1";
        nlohmann::json list = nlohmann::json::array();
        for (const CausalPath& p : found) {
          nlohmann::json one = nlohmann::json::array();
          for (VarId v : p) one.push_back(model->variable(v).name);
          list.push_back(one);
        }
        j["paths"] = list;
        out << j.dump(2) << "\n";
      } else if (found.empty()) {
        out << "no causal paths from " << from_name << " to " << to_name << "\n";
      } else {
        for (const CausalPath& p : found) {
          out << path_text(*model, p) << "\n";
        }
      }
      return kExitOk;
    }

    if (corpus_run->parsed()) {
      corpus::GoldenOutcome outcome = corpus::run_golden_checks(&out);
      return outcome.ok() ? kExitOk : kExitFalse;
    }
    if (corpus_list->parsed()) {
      for (const corpus::Fixture& fixture : corpus::builtin_fixtures()) {
        out << fixture.name << " (" << fixture.checks.size() << " checks)\n";
      }
      return kExitOk;
    }
    if (corpus_export->parsed()) {
      corpus::write_fixture_files(dir);
      out << "wrote " << corpus::builtin_fixtures().size() << " fixtures to " << dir << "\n";
      return kExitOk;
    }

    if (fuzz_props->parsed()) {
      return fuzz_properties(seed, count, out);
    }
    if (fuzz_red->parsed()) {
      return fuzz_reductions(seed, count, out);
    }
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace causal::cli
