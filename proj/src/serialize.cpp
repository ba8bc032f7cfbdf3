// Canonical text form for models, formulas, queries, and verdicts. The layout
// is fixed so goldens diff cleanly; parse(serialize(x)) is structurally x.

#include <sstream>
#include <string>

#include "causal/dsl.hpp"

namespace causal::dsl {

namespace {

// Printing precedence, loosest to tightest. If-expressions print bare only at
// statement level; as operands they are parenthesized.
int expr_prec(ExprOp op) {
  switch (op) {
    case ExprOp::If: return 0;
    case ExprOp::Or: return 1;
    case ExprOp::And: return 2;
    case ExprOp::Eq:
    case ExprOp::Ne:
    case ExprOp::Lt:
    case ExprOp::Le: return 3;
    case ExprOp::Add:
    case ExprOp::Sub: return 4;
    case ExprOp::Mul: return 5;
    case ExprOp::Not: return 6;
    default: return 7;  // constants, variables, min/max calls
  }
}

bool is_cmp(ExprOp op) {
  return op == ExprOp::Eq || op == ExprOp::Ne || op == ExprOp::Lt || op == ExprOp::Le;
}

void print_expr(std::ostream& os, const CausalModel& model, const Expr& e, int parent_prec,
                bool right_operand) {
  int prec = expr_prec(e.op());
  bool parens = false;
  if (prec < parent_prec) {
    parens = true;
  } else if (prec == parent_prec && (right_operand || is_cmp(e.op()))) {
    // Comparisons do not chain, and right operands of equal precedence need
    // parens to keep the tree shape on re-parse.
    parens = true;
  }
  if (parens) os << "(";

  switch (e.op()) {
    case ExprOp::Constant: {
      Value v = e.literal();
      if (v >= kSymbolBase || v <= -kSymbolBase) {
        for (const auto& [name, numeric] : model.symbols()) {
          if (numeric == v) {
            os << name;
            if (parens) os << ")";
            return;
          }
        }
      }
      os << v;
      break;
    }
    case ExprOp::VarRef:
      os << model.variable(e.var_id()).name;
      break;
    case ExprOp::Min:
    case ExprOp::Max:
      os << (e.op() == ExprOp::Min ? "min(" : "max(");
      print_expr(os, model, e.children()[0], 0, false);
      os << ", ";
      print_expr(os, model, e.children()[1], 0, false);
      os << ")";
      break;
    case ExprOp::Not:
      os << "!";
      print_expr(os, model, e.children()[0], expr_prec(ExprOp::Not), true);
      break;
    case ExprOp::If:
      os << "if ";
      print_expr(os, model, e.children()[0], 1, false);
      os << " then ";
      print_expr(os, model, e.children()[1], 1, false);
      os << " else ";
      print_expr(os, model, e.children()[2], 0, false);
      break;
    default: {
      const char* sym = "?";
      switch (e.op()) {
        case ExprOp::Add: sym = " + "; break;
        case ExprOp::Sub: sym = " - "; break;
        case ExprOp::Mul: sym = " * "; break;
        case ExprOp::Eq: sym = " = "; break;
        case ExprOp::Ne: sym = " != "; break;
        case ExprOp::Lt: sym = " < "; break;
        case ExprOp::Le: sym = " <= "; break;
        case ExprOp::And: sym = " & "; break;
        case ExprOp::Or: sym = " | "; break;
        default: break;
      }
      print_expr(os, model, e.children()[0], prec, false);
      os << sym;
      print_expr(os, model, e.children()[1], prec, true);
      break;
    }
  }
  if (parens) os << ")";
}

int formula_prec(BoolFormula::Kind kind) {
  switch (kind) {
    case BoolFormula::Kind::Or: return 1;
    case BoolFormula::Kind::And: return 2;
    case BoolFormula::Kind::Not: return 3;
    case BoolFormula::Kind::Event: return 4;
  }
  return 4;
}

void print_formula(std::ostream& os, const CausalModel& model, const BoolFormula& f,
                   int parent_prec, bool right_operand) {
  int prec = formula_prec(f.kind());
  bool parens = prec < parent_prec || (prec == parent_prec && right_operand &&
                                       f.kind() != BoolFormula::Kind::Event);
  if (parens) os << "(";
  switch (f.kind()) {
    case BoolFormula::Kind::Event:
      os << model.variable(f.as_event().var).name << "="
         << model.variable(f.as_event().var).domain[static_cast<std::size_t>(f.as_event().value)].name;
      break;
    case BoolFormula::Kind::Not:
      os << "!";
      print_formula(os, model, f.children()[0], 3, true);
      break;
    case BoolFormula::Kind::And:
      print_formula(os, model, f.children()[0], 2, false);
      os << " & ";
      print_formula(os, model, f.children()[1], 2, true);
      break;
    case BoolFormula::Kind::Or:
      print_formula(os, model, f.children()[0], 1, false);
      os << " | ";
      print_formula(os, model, f.children()[1], 1, true);
      break;
  }
  if (parens) os << ")";
}

std::string value_name(const CausalModel& model, VarId var, ValueIndex idx) {
  return model.variable(var).domain[static_cast<std::size_t>(idx)].name;
}

void print_settings(std::ostream& os, const CausalModel& model,
                    const std::vector<std::pair<VarId, ValueIndex>>& settings) {
  os << "{";
  bool first = true;
  for (const auto& [var, idx] : settings) {
    if (!first) os << ", ";
    first = false;
    os << model.variable(var).name << "=" << value_name(model, var, idx);
  }
  os << "}";
}

}  // namespace

std::string serialize_expr(const CausalModel& model, const Expr& expr) {
  std::ostringstream os;
  print_expr(os, model, expr, 0, false);
  return os.str();
}

std::string serialize(const CausalModel& model) {
  std::ostringstream os;
  os << "model " << model.name() << " {\n";
  for (const Variable& var : model.variables()) {
    os << "  " << (var.kind == VarKind::Exogenous ? "exo " : "endo ") << var.name << ": {";
    for (std::size_t i = 0; i < var.domain.size(); ++i) {
      if (i > 0) os << ", ";
      os << var.domain[i].name;
    }
    os << "}\n";
  }
  for (std::size_t i = 0; i < model.var_count(); ++i) {
    VarId v = static_cast<VarId>(i);
    if (!model.is_endogenous(v)) continue;
    const Expr& body = model.equation(v);
    os << "  " << model.variable(v).name << " = ";
    // A bare comparison at the top of an equation body is parenthesized so it
    // cannot be misread as part of the equation's own '='.
    print_expr(os, model, body, is_cmp(body.op()) ? 4 : 0, false);
    os << "\n";
  }
  os << "}\n";
  return os.str();
}

std::string serialize_context(const CausalModel& model, const Assignment& context) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (VarId v : model.exogenous()) {
    if (!context.has(v)) continue;
    if (!first) os << ", ";
    first = false;
    os << model.variable(v).name << "=" << value_name(model, v, context.get(v));
  }
  os << ")";
  return os.str();
}

std::string serialize_formula(const CausalModel& model, const BoolFormula& formula) {
  std::ostringstream os;
  print_formula(os, model, formula, 0, false);
  return os.str();
}

std::string serialize_formula(const CausalModel& model, const CausalFormula& formula) {
  std::ostringstream os;
  if (!formula.prefix().empty()) {
    os << "[";
    bool first = true;
    for (const auto& [var, idx] : formula.prefix().settings()) {
      if (!first) os << ", ";
      first = false;
      os << model.variable(var).name << "<-" << value_name(model, var, idx);
    }
    os << "](";
    print_formula(os, model, formula.body(), 0, false);
    os << ")";
  } else {
    print_formula(os, model, formula.body(), 0, false);
  }
  return os.str();
}

std::string serialize_event(const CausalModel& model, const PrimitiveEvent& event) {
  return model.variable(event.var).name + "=" + value_name(model, event.var, event.value);
}

std::string serialize_candidate(const CausalModel& model, const CauseCandidate& candidate) {
  std::string out;
  for (std::size_t i = 0; i < candidate.events().size(); ++i) {
    if (i > 0) out += " & ";
    out += serialize_event(model, candidate.events()[i]);
  }
  return out;
}

std::string serialize_witness(const CausalModel& model, const Witness& witness) {
  std::ostringstream os;
  os << "W = ";
  print_settings(os, model, witness.w);
  os << "; x' = ";
  print_settings(os, model, witness.x_prime);
  return os.str();
}

std::string serialize_query(const CausalModel& model, const Query& query) {
  std::ostringstream os;
  switch (query.kind) {
    case Query::Kind::Cause:
      os << "cause? " << serialize_candidate(model, *query.candidate) << " of "
         << serialize_formula(model, *query.effect) << " in "
         << serialize_context(model, query.context) << " using "
         << to_string(*query.definition);
      break;
    case Query::Kind::Causes:
      os << "causes? " << serialize_formula(model, *query.effect) << " in "
         << serialize_context(model, query.context) << " using "
         << to_string(*query.definition) << " maxsize " << query.max_size;
      break;
    case Query::Kind::PartOf:
      os << "partof? " << serialize_candidate(model, *query.candidate) << " of "
         << serialize_formula(model, *query.effect) << " in "
         << serialize_context(model, query.context) << " using "
         << to_string(*query.definition);
      break;
    case Query::Kind::Compare:
      os << "compare " << serialize_candidate(model, *query.candidate) << " of "
         << serialize_formula(model, *query.effect) << " in "
         << serialize_context(model, query.context);
      break;
  }
  return os.str();
}

std::string serialize_verdict(const CausalModel& model, const CauseVerdict& verdict) {
  std::ostringstream os;
  std::string candidate = serialize_candidate(model, verdict.candidate);
  std::string effect = serialize_formula(model, verdict.effect);
  switch (verdict.outcome) {
    case Outcome::Cause:
      os << "TRUE: " << candidate << " is a cause of " << effect << " ("
         << to_string(verdict.variant) << ")\n";
      os << "  witness: " << serialize_witness(model, *verdict.witness) << "\n";
      break;
    case Outcome::NotCause: {
      os << "FALSE: " << candidate << " is not a cause of " << effect << " ("
         << to_string(verdict.variant) << ")\n";
      const ClauseFailure& failure = *verdict.failure;
      os << "  failed: " << to_string(failure.clause);
      if (!failure.detail.empty()) os << " (" << failure.detail << ")";
      os << "\n";
      if (failure.subset && failure.subset_witness) {
        std::string subset;
        for (std::size_t i = 0; i < failure.subset->size(); ++i) {
          if (i > 0) subset += " & ";
          subset += serialize_event(model, (*failure.subset)[i]);
        }
        os << "  subset " << subset << " satisfies the definition; witness: "
           << serialize_witness(model, *failure.subset_witness) << "\n";
      }
      break;
    }
    case Outcome::BudgetExceeded:
      os << "BUDGET EXCEEDED: " << candidate << " of " << effect << " ("
         << to_string(verdict.variant) << ") was not decided\n";
      break;
  }
  return os.str();
}

}  // namespace causal::dsl
