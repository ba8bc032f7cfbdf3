// The causal-formula language: Boolean combinations of primitive events X=x
// over endogenous variables, optionally under a single intervention prefix
// [Y1 <- y1, ..., Yk <- yk], and its satisfaction relation against a model
// and context.

#pragma once

#include <span>
#include <vector>

#include "causal/model.hpp"

namespace causal {

struct PrimitiveEvent {
  VarId var = -1;
  ValueIndex value = kNoValue;

  bool operator==(const PrimitiveEvent&) const = default;
};

// Validates that the event is over an endogenous variable with an in-domain
// value.
PrimitiveEvent make_event(const CausalModel& model, VarId var, ValueIndex value);
PrimitiveEvent make_event(const CausalModel& model, std::string_view var_name,
                          std::string_view value_name);

class BoolFormula {
 public:
  enum class Kind : std::uint8_t { Event, And, Or, Not };

  static BoolFormula event(const CausalModel& model, VarId var, ValueIndex value);
  static BoolFormula event(PrimitiveEvent ev);
  static BoolFormula conj(BoolFormula a, BoolFormula b);
  static BoolFormula disj(BoolFormula a, BoolFormula b);
  static BoolFormula negation(BoolFormula a);
  // Conjunction of every event in the list (which must be nonempty).
  static BoolFormula all_of(std::span<const PrimitiveEvent> events);

  Kind kind() const { return kind_; }
  const PrimitiveEvent& as_event() const { return event_; }
  const std::vector<BoolFormula>& children() const { return kids_; }

  bool eval(const Assignment& total) const;
  void collect_vars(std::vector<char>& seen) const;
  std::vector<VarId> variables(std::size_t var_count) const;
  bool operator==(const BoolFormula& other) const;

 private:
  BoolFormula() = default;

  Kind kind_ = Kind::Event;
  PrimitiveEvent event_;
  std::vector<BoolFormula> kids_;
};

// [prefix] body. The empty prefix is the plain Boolean formula.
class CausalFormula {
 public:
  explicit CausalFormula(BoolFormula body) : body_(std::move(body)) {}
  CausalFormula(Intervention prefix, BoolFormula body)
      : prefix_(std::move(prefix)), body_(std::move(body)) {}

  const Intervention& prefix() const { return prefix_; }
  const BoolFormula& body() const { return body_; }

  bool operator==(const CausalFormula&) const = default;

 private:
  Intervention prefix_;
  BoolFormula body_;
};

// Satisfaction of a causal formula: the prefix is applied as an intervention
// and the body is checked against the unique solution.
bool holds(const CausalModel& model, const Assignment& context, const CausalFormula& formula);
bool holds(const CausalModel& model, const Assignment& context, const Intervention& prefix,
           const BoolFormula& body);

// Restriction of solve(model, context) to the requested variables.
Assignment actual_values(const CausalModel& model, const Assignment& context,
                         std::span<const VarId> vars);

}  // namespace causal
