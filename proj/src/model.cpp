#include "causal/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace causal {

namespace {

constexpr std::uint64_t kAnalysisLimit = std::uint64_t{1} << 22;

bool is_canonical_int(std::string_view s, Value& out) {
  if (s.empty()) return false;
  std::string_view digits = s;
  if (digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) return false;
  if (digits.size() > 1 && digits.front() == '0') return false;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

[[noreturn]] void fail(ModelErrorKind kind, const std::string& subject,
                       const std::string& message) {
  throw ModelError(kind, subject, message);
}

}  // namespace

const char* to_string(ModelErrorKind kind) {
  switch (kind) {
    case ModelErrorKind::DuplicateVariable: return "duplicate variable";
    case ModelErrorKind::EmptyDomain: return "empty domain";
    case ModelErrorKind::DuplicateDomainValue: return "duplicate domain value";
    case ModelErrorKind::TooManyVariables: return "too many variables";
    case ModelErrorKind::DomainTooLarge: return "domain too large";
    case ModelErrorKind::MissingEquation: return "missing equation";
    case ModelErrorKind::DuplicateEquation: return "duplicate equation";
    case ModelErrorKind::EquationOnExogenous: return "equation on exogenous variable";
    case ModelErrorKind::UndeclaredVariable: return "undeclared variable";
    case ModelErrorKind::SelfReference: return "self-referencing equation";
    case ModelErrorKind::OutOfDomain: return "value outside the variable's domain";
    case ModelErrorKind::Cycle: return "cyclic dependence";
    case ModelErrorKind::AnalysisTooLarge: return "equation too large to analyze";
    case ModelErrorKind::IncompleteContext: return "incomplete context";
    case ModelErrorKind::ContextAssignsEndogenous: return "context assigns endogenous variable";
    case ModelErrorKind::InterventionOnExogenous: return "intervention on exogenous variable";
    case ModelErrorKind::ArithmeticOverflow: return "arithmetic overflow";
  }
  return "model error";
}

// ---------------------------------------------------------------------------
// Variable
// ---------------------------------------------------------------------------

std::optional<ValueIndex> Variable::index_of_name(std::string_view value_name) const {
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain[i].name == value_name) return static_cast<ValueIndex>(i);
  }
  return std::nullopt;
}

std::optional<ValueIndex> Variable::index_of_numeric(Value v) const {
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain[i].numeric == v) return static_cast<ValueIndex>(i);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Expr
// ---------------------------------------------------------------------------

Expr Expr::constant(Value v) {
  Expr e;
  e.op_ = ExprOp::Constant;
  e.literal_ = v;
  return e;
}

Expr Expr::var(VarId id) {
  Expr e;
  e.op_ = ExprOp::VarRef;
  e.var_ = id;
  return e;
}

#define CAUSAL_BINARY_FACTORY(fn, opcode)          \
  Expr Expr::fn(Expr a, Expr b) {                  \
    Expr e;                                        \
    e.op_ = ExprOp::opcode;                        \
    e.kids_.reserve(2);                            \
    e.kids_.push_back(std::move(a));               \
    e.kids_.push_back(std::move(b));               \
    return e;                                      \
  }

CAUSAL_BINARY_FACTORY(add, Add)
CAUSAL_BINARY_FACTORY(sub, Sub)
CAUSAL_BINARY_FACTORY(mul, Mul)
CAUSAL_BINARY_FACTORY(min, Min)
CAUSAL_BINARY_FACTORY(max, Max)
CAUSAL_BINARY_FACTORY(eq, Eq)
CAUSAL_BINARY_FACTORY(ne, Ne)
CAUSAL_BINARY_FACTORY(lt, Lt)
CAUSAL_BINARY_FACTORY(le, Le)
CAUSAL_BINARY_FACTORY(logical_and, And)
CAUSAL_BINARY_FACTORY(logical_or, Or)

#undef CAUSAL_BINARY_FACTORY

Expr Expr::logical_not(Expr a) {
  Expr e;
  e.op_ = ExprOp::Not;
  e.kids_.push_back(std::move(a));
  return e;
}

Expr Expr::if_then_else(Expr cond, Expr then_branch, Expr else_branch) {
  Expr e;
  e.op_ = ExprOp::If;
  e.kids_.reserve(3);
  e.kids_.push_back(std::move(cond));
  e.kids_.push_back(std::move(then_branch));
  e.kids_.push_back(std::move(else_branch));
  return e;
}

Value Expr::eval(std::span<const Value> values) const {
  switch (op_) {
    case ExprOp::Constant:
      return literal_;
    case ExprOp::VarRef:
      return values[static_cast<std::size_t>(var_)];
    case ExprOp::Add: {
      Value a = kids_[0].eval(values), b = kids_[1].eval(values), r = 0;
      if (__builtin_add_overflow(a, b, &r))
        fail(ModelErrorKind::ArithmeticOverflow, "", "arithmetic overflow in +");
      return r;
    }
    case ExprOp::Sub: {
      Value a = kids_[0].eval(values), b = kids_[1].eval(values), r = 0;
      if (__builtin_sub_overflow(a, b, &r))
        fail(ModelErrorKind::ArithmeticOverflow, "", "arithmetic overflow in -");
      return r;
    }
    case ExprOp::Mul: {
      Value a = kids_[0].eval(values), b = kids_[1].eval(values), r = 0;
      if (__builtin_mul_overflow(a, b, &r))
        fail(ModelErrorKind::ArithmeticOverflow, "", "arithmetic overflow in *");
      return r;
    }
    case ExprOp::Min:
      return std::min(kids_[0].eval(values), kids_[1].eval(values));
    case ExprOp::Max:
      return std::max(kids_[0].eval(values), kids_[1].eval(values));
    case ExprOp::Eq:
      return kids_[0].eval(values) == kids_[1].eval(values) ? 1 : 0;
    case ExprOp::Ne:
      return kids_[0].eval(values) != kids_[1].eval(values) ? 1 : 0;
    case ExprOp::Lt:
      return kids_[0].eval(values) < kids_[1].eval(values) ? 1 : 0;
    case ExprOp::Le:
      return kids_[0].eval(values) <= kids_[1].eval(values) ? 1 : 0;
    case ExprOp::And:
      return (kids_[0].eval(values) != 0 && kids_[1].eval(values) != 0) ? 1 : 0;
    case ExprOp::Or:
      return (kids_[0].eval(values) != 0 || kids_[1].eval(values) != 0) ? 1 : 0;
    case ExprOp::Not:
      return kids_[0].eval(values) == 0 ? 1 : 0;
    case ExprOp::If:
      return kids_[0].eval(values) != 0 ? kids_[1].eval(values) : kids_[2].eval(values);
  }
  return 0;
}

bool Expr::references(VarId id) const {
  if (op_ == ExprOp::VarRef) return var_ == id;
  for (const Expr& k : kids_) {
    if (k.references(id)) return true;
  }
  return false;
}

void Expr::collect_vars(std::vector<char>& seen) const {
  if (op_ == ExprOp::VarRef) {
    if (var_ < 0 || static_cast<std::size_t>(var_) >= seen.size()) {
      fail(ModelErrorKind::UndeclaredVariable, std::to_string(var_),
           "expression references an undeclared variable");
    }
    seen[static_cast<std::size_t>(var_)] = 1;
    return;
  }
  for (const Expr& k : kids_) k.collect_vars(seen);
}

std::vector<VarId> Expr::variables(std::size_t var_count) const {
  std::vector<char> seen(var_count, 0);
  collect_vars(seen);
  std::vector<VarId> out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.push_back(static_cast<VarId>(i));
  }
  return out;
}

bool Expr::operator==(const Expr& other) const {
  if (op_ != other.op_) return false;
  switch (op_) {
    case ExprOp::Constant: return literal_ == other.literal_;
    case ExprOp::VarRef: return var_ == other.var_;
    default: break;
  }
  return kids_ == other.kids_;
}

// ---------------------------------------------------------------------------
// Assignment / Intervention
// ---------------------------------------------------------------------------

std::size_t Assignment::assigned_count() const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(),
                    [](ValueIndex v) { return v != kNoValue; }));
}

void Intervention::add(const CausalModel& model, VarId target, ValueIndex value) {
  if (target < 0 || static_cast<std::size_t>(target) >= model.var_count()) {
    fail(ModelErrorKind::UndeclaredVariable, std::to_string(target),
         "intervention targets an unknown variable");
  }
  const Variable& var = model.variable(target);
  if (var.kind != VarKind::Endogenous) {
    fail(ModelErrorKind::InterventionOnExogenous, var.name,
         "cannot intervene on exogenous variable '" + var.name + "'");
  }
  model.check_value(target, value);
  if (sets(target)) {
    fail(ModelErrorKind::DuplicateEquation, var.name,
         "intervention sets variable '" + var.name + "' twice");
  }
  settings_.emplace_back(target, value);
}

bool Intervention::sets(VarId v) const {
  return value_for(v).has_value();
}

std::optional<ValueIndex> Intervention::value_for(VarId v) const {
  for (const auto& [target, value] : settings_) {
    if (target == v) return value;
  }
  return std::nullopt;
}

Intervention Intervention::single(const CausalModel& model, VarId target, ValueIndex value) {
  Intervention iv;
  iv.add(model, target, value);
  return iv;
}

Intervention Intervention::compose(const CausalModel& model, const Intervention& a,
                                   const Intervention& b) {
  Intervention out;
  for (const auto& [target, value] : a.settings_) {
    if (!b.sets(target)) out.add(model, target, value);
  }
  for (const auto& [target, value] : b.settings_) out.add(model, target, value);
  return out;
}

// ---------------------------------------------------------------------------
// DependencyGraph
// ---------------------------------------------------------------------------

bool DependencyGraph::has_edge(VarId from, VarId to) const {
  const auto& p = parents[static_cast<std::size_t>(to)];
  return std::binary_search(p.begin(), p.end(), from);
}

// ---------------------------------------------------------------------------
// CausalModel
// ---------------------------------------------------------------------------

std::optional<VarId> CausalModel::find(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return static_cast<VarId>(i);
  }
  return std::nullopt;
}

const Expr& CausalModel::equation(VarId target) const {
  const auto& eq = equations_[static_cast<std::size_t>(target)];
  if (!eq.has_value()) {
    fail(ModelErrorKind::MissingEquation, variable(target).name,
         "variable '" + variable(target).name + "' has no equation");
  }
  return *eq;
}

void CausalModel::check_value(VarId v, ValueIndex idx) const {
  const Variable& var = variable(v);
  if (idx < 0 || static_cast<std::size_t>(idx) >= var.domain.size()) {
    fail(ModelErrorKind::OutOfDomain, var.name,
         "value index " + std::to_string(idx) + " is outside the domain of '" +
             var.name + "'");
  }
}

void CausalModel::solve_into(const Assignment& context, const Intervention* intervention,
                             std::vector<Value>& raw, Assignment& out) const {
  const std::size_t n = variables_.size();
  if (context.size() != n) {
    fail(ModelErrorKind::IncompleteContext, name_,
         "context does not match the model's variables");
  }
  raw.resize(n);
  // Variables that are never read before being computed still need defined
  // slots; semantic independence makes the chosen filler irrelevant.
  for (std::size_t i = 0; i < n; ++i) {
    raw[i] = variables_[i].domain.empty() ? 0 : variables_[i].domain[0].numeric;
  }
  if (out.size() != n) out = Assignment(n);

  for (VarId v : exogenous_) {
    if (!context.has(v)) {
      fail(ModelErrorKind::IncompleteContext, variable(v).name,
           "context does not assign exogenous variable '" + variable(v).name + "'");
    }
    ValueIndex idx = context.get(v);
    check_value(v, idx);
    raw[static_cast<std::size_t>(v)] = variable(v).domain[static_cast<std::size_t>(idx)].numeric;
    out.set(v, idx);
  }
  for (VarId v : endogenous_) {
    if (context.has(v)) {
      fail(ModelErrorKind::ContextAssignsEndogenous, variable(v).name,
           "context assigns endogenous variable '" + variable(v).name + "'");
    }
  }

  for (VarId v : eval_order_) {
    ValueIndex idx;
    if (intervention != nullptr) {
      if (auto forced = intervention->value_for(v)) {
        check_value(v, *forced);
        idx = *forced;
        raw[static_cast<std::size_t>(v)] =
            variable(v).domain[static_cast<std::size_t>(idx)].numeric;
        out.set(v, idx);
        continue;
      }
    }
    Value result = equation(v).eval(raw);
    auto found = variable(v).index_of_numeric(result);
    if (!found) {
      fail(ModelErrorKind::OutOfDomain, variable(v).name,
           "equation for '" + variable(v).name + "' produced " + std::to_string(result) +
               ", which is outside its domain");
    }
    idx = *found;
    raw[static_cast<std::size_t>(v)] = result;
    out.set(v, idx);
  }
}

Assignment CausalModel::solve(const Assignment& context) const {
  std::vector<Value> raw;
  Assignment out;
  solve_into(context, nullptr, raw, out);
  return out;
}

Assignment CausalModel::solve(const Assignment& context, const Intervention& intervention) const {
  std::vector<Value> raw;
  Assignment out;
  solve_into(context, &intervention, raw, out);
  return out;
}

CausalModel CausalModel::intervened(const Intervention& intervention) const {
  CausalModel copy = *this;
  for (const auto& [target, value] : intervention.settings()) {
    const Variable& var = copy.variable(target);
    if (var.kind != VarKind::Endogenous) {
      fail(ModelErrorKind::InterventionOnExogenous, var.name,
           "cannot intervene on exogenous variable '" + var.name + "'");
    }
    copy.check_value(target, value);
    copy.equations_[static_cast<std::size_t>(target)] =
        Expr::constant(var.domain[static_cast<std::size_t>(value)].numeric);
  }
  copy.analyze();
  return copy;
}

bool CausalModel::operator==(const CausalModel& other) const {
  if (name_ != other.name_) return false;
  if (variables_.size() != other.variables_.size()) return false;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const Variable& a = variables_[i];
    const Variable& b = other.variables_[i];
    if (a.name != b.name || a.kind != b.kind || a.domain.size() != b.domain.size()) return false;
    for (std::size_t j = 0; j < a.domain.size(); ++j) {
      if (a.domain[j].name != b.domain[j].name || a.domain[j].numeric != b.domain[j].numeric)
        return false;
    }
  }
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (equations_[i].has_value() != other.equations_[i].has_value()) return false;
    if (equations_[i].has_value() && !(*equations_[i] == *other.equations_[i])) return false;
  }
  return true;
}

void CausalModel::analyze() {
  const std::size_t n = variables_.size();
  deps_ = DependencyGraph{};
  deps_.var_count = n;
  deps_.parents.assign(n, {});
  deps_.children.assign(n, {});

  std::vector<Value> raw(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    raw[i] = variables_[i].domain.empty() ? 0 : variables_[i].domain[0].numeric;
  }

  for (VarId x : endogenous_) {
    const Expr& body = equation(x);
    std::vector<VarId> support = body.variables(n);
    for (VarId y : support) {
      // Semantic dependence: enumerate the rest of the support and look for a
      // setting under which varying y changes the equation's output.
      std::vector<VarId> others;
      std::uint64_t combos = 1;
      for (VarId s : support) {
        if (s == y) continue;
        others.push_back(s);
        combos *= variables_[static_cast<std::size_t>(s)].domain.size();
        if (combos > kAnalysisLimit) {
          fail(ModelErrorKind::AnalysisTooLarge, variables_[static_cast<std::size_t>(x)].name,
               "equation for '" + variables_[static_cast<std::size_t>(x)].name +
                   "' is too large for exhaustive dependence analysis");
        }
      }

      std::vector<std::size_t> odometer(others.size(), 0);
      bool depends = false;
      while (!depends) {
        for (std::size_t i = 0; i < others.size(); ++i) {
          const Variable& ov = variables_[static_cast<std::size_t>(others[i])];
          raw[static_cast<std::size_t>(others[i])] = ov.domain[odometer[i]].numeric;
        }
        const Variable& yv = variables_[static_cast<std::size_t>(y)];
        raw[static_cast<std::size_t>(y)] = yv.domain[0].numeric;
        Value first = body.eval(raw);
        for (std::size_t k = 1; k < yv.domain.size() && !depends; ++k) {
          raw[static_cast<std::size_t>(y)] = yv.domain[k].numeric;
          if (body.eval(raw) != first) depends = true;
        }
        // Advance the odometer.
        std::size_t pos = 0;
        for (; pos < odometer.size(); ++pos) {
          const Variable& ov = variables_[static_cast<std::size_t>(others[pos])];
          if (++odometer[pos] < ov.domain.size()) break;
          odometer[pos] = 0;
        }
        if (pos == odometer.size()) break;
      }
      if (depends) {
        deps_.parents[static_cast<std::size_t>(x)].push_back(y);
        deps_.children[static_cast<std::size_t>(y)].push_back(x);
      }
    }
  }
  for (auto& v : deps_.parents) std::sort(v.begin(), v.end());
  for (auto& v : deps_.children) std::sort(v.begin(), v.end());

  // Topological order over the endogenous subgraph; lowest VarId first keeps
  // the order deterministic.
  std::vector<int> indegree(n, 0);
  for (VarId x : endogenous_) {
    for (VarId p : deps_.parents[static_cast<std::size_t>(x)]) {
      if (is_endogenous(p)) indegree[static_cast<std::size_t>(x)]++;
    }
  }
  eval_order_.clear();
  std::vector<char> placed(n, 0);
  for (std::size_t step = 0; step < endogenous_.size(); ++step) {
    VarId next = -1;
    for (VarId v : endogenous_) {
      if (!placed[static_cast<std::size_t>(v)] && indegree[static_cast<std::size_t>(v)] == 0) {
        next = v;
        break;
      }
    }
    if (next == -1) {
      std::string members;
      for (VarId v : endogenous_) {
        if (!placed[static_cast<std::size_t>(v)]) {
          if (!members.empty()) members += ", ";
          members += variables_[static_cast<std::size_t>(v)].name;
        }
      }
      fail(ModelErrorKind::Cycle, members, "cyclic dependence among: " + members);
    }
    placed[static_cast<std::size_t>(next)] = 1;
    eval_order_.push_back(next);
    for (VarId c : deps_.children[static_cast<std::size_t>(next)]) {
      if (is_endogenous(c)) indegree[static_cast<std::size_t>(c)]--;
    }
  }

  // Build-time in-domain sweep over each equation's support, skipped when the
  // support is too large (solve then reports out-of-domain results instead).
  for (VarId x : endogenous_) {
    const Expr& body = equation(x);
    std::vector<VarId> support = body.variables(n);
    std::uint64_t combos = 1;
    bool feasible = true;
    for (VarId s : support) {
      combos *= variables_[static_cast<std::size_t>(s)].domain.size();
      if (combos > kAnalysisLimit) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    std::vector<std::size_t> odometer(support.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < support.size(); ++i) {
        const Variable& sv = variables_[static_cast<std::size_t>(support[i])];
        raw[static_cast<std::size_t>(support[i])] = sv.domain[odometer[i]].numeric;
      }
      Value result = body.eval(raw);
      const Variable& xv = variables_[static_cast<std::size_t>(x)];
      if (!xv.index_of_numeric(result)) {
        fail(ModelErrorKind::OutOfDomain, xv.name,
             "equation for '" + xv.name + "' can produce " + std::to_string(result) +
                 ", which is outside its domain");
      }
      std::size_t pos = 0;
      for (; pos < odometer.size(); ++pos) {
        const Variable& sv = variables_[static_cast<std::size_t>(support[pos])];
        if (++odometer[pos] < sv.domain.size()) break;
        odometer[pos] = 0;
      }
      if (pos == odometer.size()) break;
    }
  }
}

// ---------------------------------------------------------------------------
// ModelBuilder
// ---------------------------------------------------------------------------

ModelBuilder::ModelBuilder(std::string name, ModelLimits limits) {
  model_.name_ = std::move(name);
  model_.limits_ = limits;
}

std::optional<VarId> ModelBuilder::find(std::string_view name) const {
  return model_.find(name);
}

Value ModelBuilder::value_numeric(const std::string& value_name) {
  Value parsed = 0;
  if (is_canonical_int(value_name, parsed)) {
    if (parsed >= kSymbolBase || parsed <= -kSymbolBase) {
      fail(ModelErrorKind::DomainTooLarge, value_name,
           "integer domain value " + value_name + " is outside the supported range");
    }
    return parsed;
  }
  for (const auto& [name, numeric] : model_.symbols_) {
    if (name == value_name) return numeric;
  }
  Value numeric = kSymbolBase + static_cast<Value>(model_.symbols_.size());
  model_.symbols_.emplace_back(value_name, numeric);
  return numeric;
}

std::optional<Value> ModelBuilder::lookup_symbol(std::string_view name) const {
  for (const auto& [sym, numeric] : model_.symbols_) {
    if (sym == name) return numeric;
  }
  return std::nullopt;
}

VarId ModelBuilder::declare(const std::string& name, VarKind kind,
                            const std::vector<std::string>& values) {
  if (model_.find(name)) {
    fail(ModelErrorKind::DuplicateVariable, name, "variable '" + name + "' declared twice");
  }
  if (static_cast<int>(model_.variables_.size()) >= model_.limits_.max_variables) {
    fail(ModelErrorKind::TooManyVariables, name,
         "model exceeds the variable limit of " +
             std::to_string(model_.limits_.max_variables));
  }
  if (values.empty()) {
    fail(ModelErrorKind::EmptyDomain, name, "variable '" + name + "' has an empty domain");
  }
  if (static_cast<int>(values.size()) > model_.limits_.max_domain_size) {
    fail(ModelErrorKind::DomainTooLarge, name,
         "domain of '" + name + "' exceeds the limit of " +
             std::to_string(model_.limits_.max_domain_size) + " values");
  }

  Variable var;
  var.name = name;
  var.kind = kind;
  for (const std::string& value_name : values) {
    if (std::any_of(var.domain.begin(), var.domain.end(),
                    [&](const DomainValue& d) { return d.name == value_name; })) {
      fail(ModelErrorKind::DuplicateDomainValue, name,
           "domain of '" + name + "' repeats value '" + value_name + "'");
    }
    var.domain.push_back(DomainValue{value_name, value_numeric(value_name)});
  }

  model_.variables_.push_back(std::move(var));
  model_.equations_.emplace_back();
  VarId id = static_cast<VarId>(model_.variables_.size() - 1);
  if (kind == VarKind::Exogenous) {
    model_.exogenous_.push_back(id);
  } else {
    model_.endogenous_.push_back(id);
  }
  return id;
}

VarId ModelBuilder::exogenous(const std::string& name, const std::vector<std::string>& values) {
  return declare(name, VarKind::Exogenous, values);
}

VarId ModelBuilder::endogenous(const std::string& name, const std::vector<std::string>& values) {
  return declare(name, VarKind::Endogenous, values);
}

void ModelBuilder::equation(VarId target, Expr body) {
  if (target < 0 || static_cast<std::size_t>(target) >= model_.variables_.size()) {
    fail(ModelErrorKind::UndeclaredVariable, std::to_string(target),
         "equation target is not a declared variable");
  }
  const Variable& var = model_.variables_[static_cast<std::size_t>(target)];
  if (var.kind != VarKind::Endogenous) {
    fail(ModelErrorKind::EquationOnExogenous, var.name,
         "exogenous variable '" + var.name + "' cannot have an equation");
  }
  if (model_.equations_[static_cast<std::size_t>(target)].has_value()) {
    fail(ModelErrorKind::DuplicateEquation, var.name,
         "variable '" + var.name + "' has two equations");
  }
  std::vector<char> seen(model_.variables_.size(), 0);
  body.collect_vars(seen);  // range-checks every reference
  if (body.references(target)) {
    fail(ModelErrorKind::SelfReference, var.name,
         "equation for '" + var.name + "' references its own target");
  }
  model_.equations_[static_cast<std::size_t>(target)] = std::move(body);
}

CausalModel ModelBuilder::build() {
  if (built_) {
    throw std::logic_error("ModelBuilder::build called twice");
  }
  for (VarId v : model_.endogenous_) {
    if (!model_.equations_[static_cast<std::size_t>(v)].has_value()) {
      fail(ModelErrorKind::MissingEquation, model_.variables_[static_cast<std::size_t>(v)].name,
           "endogenous variable '" + model_.variables_[static_cast<std::size_t>(v)].name +
               "' has no equation");
    }
  }
  model_.endogenous_by_name_ = model_.endogenous_;
  std::sort(model_.endogenous_by_name_.begin(), model_.endogenous_by_name_.end(),
            [&](VarId a, VarId b) {
              return model_.variables_[static_cast<std::size_t>(a)].name <
                     model_.variables_[static_cast<std::size_t>(b)].name;
            });
  model_.analyze();
  built_ = true;
  return std::move(model_);
}

}  // namespace causal
