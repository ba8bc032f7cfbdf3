#include "causal/formula.hpp"

namespace causal {

PrimitiveEvent make_event(const CausalModel& model, VarId var, ValueIndex value) {
  if (var < 0 || static_cast<std::size_t>(var) >= model.var_count()) {
    throw ModelError(ModelErrorKind::UndeclaredVariable, std::to_string(var),
                     "primitive event references an unknown variable");
  }
  if (!model.is_endogenous(var)) {
    throw ModelError(ModelErrorKind::EquationOnExogenous, model.variable(var).name,
                     "primitive events range over endogenous variables; '" +
                         model.variable(var).name + "' is exogenous");
  }
  model.check_value(var, value);
  return PrimitiveEvent{var, value};
}

PrimitiveEvent make_event(const CausalModel& model, std::string_view var_name,
                          std::string_view value_name) {
  auto var = model.find(var_name);
  if (!var) {
    throw ModelError(ModelErrorKind::UndeclaredVariable, std::string(var_name),
                     "unknown variable '" + std::string(var_name) + "'");
  }
  auto idx = model.variable(*var).index_of_name(value_name);
  if (!idx) {
    throw ModelError(ModelErrorKind::OutOfDomain, std::string(value_name),
                     "'" + std::string(value_name) + "' is not in the domain of '" +
                         std::string(var_name) + "'");
  }
  return make_event(model, *var, *idx);
}

BoolFormula BoolFormula::event(const CausalModel& model, VarId var, ValueIndex value) {
  return event(make_event(model, var, value));
}

BoolFormula BoolFormula::event(PrimitiveEvent ev) {
  BoolFormula f;
  f.kind_ = Kind::Event;
  f.event_ = ev;
  return f;
}

BoolFormula BoolFormula::conj(BoolFormula a, BoolFormula b) {
  BoolFormula f;
  f.kind_ = Kind::And;
  f.kids_.reserve(2);
  f.kids_.push_back(std::move(a));
  f.kids_.push_back(std::move(b));
  return f;
}

BoolFormula BoolFormula::disj(BoolFormula a, BoolFormula b) {
  BoolFormula f;
  f.kind_ = Kind::Or;
  f.kids_.reserve(2);
  f.kids_.push_back(std::move(a));
  f.kids_.push_back(std::move(b));
  return f;
}

BoolFormula BoolFormula::negation(BoolFormula a) {
  BoolFormula f;
  f.kind_ = Kind::Not;
  f.kids_.push_back(std::move(a));
  return f;
}

BoolFormula BoolFormula::all_of(std::span<const PrimitiveEvent> events) {
  if (events.empty()) {
    throw std::invalid_argument("all_of requires at least one event");
  }
  BoolFormula f = event(events[0]);
  for (std::size_t i = 1; i < events.size(); ++i) {
    f = conj(std::move(f), event(events[i]));
  }
  return f;
}

bool BoolFormula::eval(const Assignment& total) const {
  switch (kind_) {
    case Kind::Event:
      return total.get(event_.var) == event_.value;
    case Kind::And:
      return kids_[0].eval(total) && kids_[1].eval(total);
    case Kind::Or:
      return kids_[0].eval(total) || kids_[1].eval(total);
    case Kind::Not:
      return !kids_[0].eval(total);
  }
  return false;
}

void BoolFormula::collect_vars(std::vector<char>& seen) const {
  if (kind_ == Kind::Event) {
    if (event_.var < 0 || static_cast<std::size_t>(event_.var) >= seen.size()) {
      throw ModelError(ModelErrorKind::UndeclaredVariable, std::to_string(event_.var),
                       "formula references an unknown variable");
    }
    seen[static_cast<std::size_t>(event_.var)] = 1;
    return;
  }
  for (const BoolFormula& k : kids_) k.collect_vars(seen);
}

std::vector<VarId> BoolFormula::variables(std::size_t var_count) const {
  std::vector<char> seen(var_count, 0);
  collect_vars(seen);
  std::vector<VarId> out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.push_back(static_cast<VarId>(i));
  }
  return out;
}

bool BoolFormula::operator==(const BoolFormula& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::Event) return event_ == other.event_;
  return kids_ == other.kids_;
}

bool holds(const CausalModel& model, const Assignment& context, const Intervention& prefix,
           const BoolFormula& body) {
  std::vector<char> seen(model.var_count(), 0);
  body.collect_vars(seen);  // rejects formulas built for another model
  Assignment solution = model.solve(context, prefix);
  return body.eval(solution);
}

bool holds(const CausalModel& model, const Assignment& context, const CausalFormula& formula) {
  return holds(model, context, formula.prefix(), formula.body());
}

Assignment actual_values(const CausalModel& model, const Assignment& context,
                         std::span<const VarId> vars) {
  Assignment solution = model.solve(context);
  Assignment out(model.var_count());
  for (VarId v : vars) {
    if (v < 0 || static_cast<std::size_t>(v) >= model.var_count()) {
      throw ModelError(ModelErrorKind::UndeclaredVariable, std::to_string(v),
                       "actual_values: unknown variable");
    }
    out.set(v, solution.get(v));
  }
  return out;
}

}  // namespace causal
