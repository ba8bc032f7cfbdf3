// Textual language for models, contexts, formulas, and cause queries, plus
// the canonical serializer. Parsing is total: any input yields either a value
// or at least one position-tagged diagnostic, never a crash.
//
// File extensions: `.scm-model` for models, `.scm-query` for queries. The
// grammar is documented in docs/grammar.md and pinned by golden tests.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "causal/engine.hpp"

namespace causal::dsl {

struct Diagnostic {
  int line = 0;  // 1-based
  int col = 0;   // 1-based
  std::string message;
};

std::string format(const Diagnostic& d);

template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
};

// The definitions a query may name. The first four dispatch to the cause
// engine, the last two to the path-based definitions.
enum class Definition : std::uint8_t {
  ButFor, Original, Updated, Modified, HAccount, Hitchcock
};

const char* to_string(Definition d);
std::optional<Definition> definition_from_string(std::string_view name);
// Engine variant for the conjunction-based definitions; nullopt for the
// path-based ones (HAccount, Hitchcock).
std::optional<Variant> hp_variant(Definition d);

struct Query {
  enum class Kind : std::uint8_t { Cause, Causes, PartOf, Compare };

  Kind kind = Kind::Cause;
  std::optional<CauseCandidate> candidate;  // Cause, PartOf (singleton), Compare
  std::optional<BoolFormula> effect;
  Assignment context;
  std::optional<Definition> definition;     // empty for Compare
  int max_size = 0;                         // Causes only
};

ParseResult<CausalModel> parse_model(std::string_view text, ModelLimits limits = {});
ParseResult<Assignment> parse_context(std::string_view text, const CausalModel& model);
ParseResult<CausalFormula> parse_formula(std::string_view text, const CausalModel& model);

// The CLI's "CAND of EFFECT" fragment, e.g. "ST=1 of BS=1".
struct CauseSpec {
  CauseCandidate candidate;
  BoolFormula effect;
};
ParseResult<CauseSpec> parse_cause_spec(std::string_view text, const CausalModel& model);

ParseResult<Query> parse_query(std::string_view text, const CausalModel& model);

// Canonical serialization; parse ∘ serialize is the identity up to whitespace.
std::string serialize(const CausalModel& model);
std::string serialize_expr(const CausalModel& model, const Expr& expr);
std::string serialize_context(const CausalModel& model, const Assignment& context);
std::string serialize_formula(const CausalModel& model, const BoolFormula& formula);
std::string serialize_formula(const CausalModel& model, const CausalFormula& formula);
std::string serialize_candidate(const CausalModel& model, const CauseCandidate& candidate);
std::string serialize_event(const CausalModel& model, const PrimitiveEvent& event);
std::string serialize_witness(const CausalModel& model, const Witness& witness);
std::string serialize_query(const CausalModel& model, const Query& query);
std::string serialize_verdict(const CausalModel& model, const CauseVerdict& verdict);

}  // namespace causal::dsl
