// Finite-domain structural causal models: variables with named finite domains,
// one structural equation per endogenous variable, semantic dependency
// analysis, unique-solution evaluation, and surgical interventions.
//
// Models are immutable after construction and every operation here is a pure
// function, so concurrent callers may share a model freely.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace causal {

using VarId = int;
using Value = std::int64_t;        // raw numeric value during evaluation
using ValueIndex = std::int16_t;   // position within a variable's domain

inline constexpr ValueIndex kNoValue = -1;

// Non-integer domain values ("tie", "left", ...) are mapped to unique numeric
// ids at or above this base, in order of first appearance in the model.
inline constexpr Value kSymbolBase = 1'000'000'000;

enum class VarKind : std::uint8_t { Exogenous, Endogenous };

struct DomainValue {
  std::string name;   // canonical spelling: decimal integer or identifier
  Value numeric;      // value seen by expression evaluation
};

struct Variable {
  std::string name;
  VarKind kind;
  std::vector<DomainValue> domain;

  std::optional<ValueIndex> index_of_name(std::string_view value_name) const;
  std::optional<ValueIndex> index_of_numeric(Value v) const;
};

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class ModelErrorKind {
  DuplicateVariable,
  EmptyDomain,
  DuplicateDomainValue,
  TooManyVariables,
  DomainTooLarge,
  MissingEquation,
  DuplicateEquation,
  EquationOnExogenous,
  UndeclaredVariable,
  SelfReference,
  OutOfDomain,
  Cycle,
  AnalysisTooLarge,
  IncompleteContext,
  ContextAssignsEndogenous,
  InterventionOnExogenous,
  ArithmeticOverflow,
};

class ModelError : public std::runtime_error {
 public:
  ModelError(ModelErrorKind kind, std::string subject, const std::string& message)
      : std::runtime_error(message), kind_(kind), subject_(std::move(subject)) {}

  ModelErrorKind kind() const { return kind_; }
  // The variable (or value) the error is about, when there is one.
  const std::string& subject() const { return subject_; }

 private:
  ModelErrorKind kind_;
  std::string subject_;
};

const char* to_string(ModelErrorKind kind);

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

enum class ExprOp : std::uint8_t {
  Constant, VarRef,
  Add, Sub, Mul, Min, Max,
  Eq, Ne, Lt, Le,
  And, Or, Not,
  If,
};

// Immutable expression tree. Comparisons and Boolean operators yield 0/1;
// Boolean operators treat any nonzero operand as true.
class Expr {
 public:
  Expr() = default;

  static Expr constant(Value v);
  static Expr var(VarId id);
  static Expr add(Expr a, Expr b);
  static Expr sub(Expr a, Expr b);
  static Expr mul(Expr a, Expr b);
  static Expr min(Expr a, Expr b);
  static Expr max(Expr a, Expr b);
  static Expr eq(Expr a, Expr b);
  static Expr ne(Expr a, Expr b);
  static Expr lt(Expr a, Expr b);
  static Expr le(Expr a, Expr b);
  static Expr logical_and(Expr a, Expr b);
  static Expr logical_or(Expr a, Expr b);
  static Expr logical_not(Expr a);
  static Expr if_then_else(Expr cond, Expr then_branch, Expr else_branch);

  ExprOp op() const { return op_; }
  Value literal() const { return literal_; }
  VarId var_id() const { return var_; }
  const std::vector<Expr>& children() const { return kids_; }

  // Evaluates against raw numeric values indexed by VarId. Throws ModelError
  // (ArithmeticOverflow) if 64-bit arithmetic would overflow.
  Value eval(std::span<const Value> values) const;

  bool references(VarId id) const;
  void collect_vars(std::vector<char>& seen) const;
  std::vector<VarId> variables(std::size_t var_count) const;

  bool operator==(const Expr& other) const;

 private:
  ExprOp op_ = ExprOp::Constant;
  Value literal_ = 0;
  VarId var_ = -1;
  std::vector<Expr> kids_;
};

// ---------------------------------------------------------------------------
// Assignments and interventions
// ---------------------------------------------------------------------------

// Partial or total map from variables to domain positions. Sized to a model's
// variable count; kNoValue marks unassigned slots.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t var_count) : values_(var_count, kNoValue) {}

  std::size_t size() const { return values_.size(); }
  bool has(VarId v) const { return values_[static_cast<std::size_t>(v)] != kNoValue; }
  ValueIndex get(VarId v) const { return values_[static_cast<std::size_t>(v)]; }
  void set(VarId v, ValueIndex idx) { values_[static_cast<std::size_t>(v)] = idx; }
  void clear(VarId v) { values_[static_cast<std::size_t>(v)] = kNoValue; }

  std::size_t assigned_count() const;

  bool operator==(const Assignment&) const = default;

 private:
  std::vector<ValueIndex> values_;
};

class CausalModel;

// An ordered list of endogenous settings Y <- y. Construction validates each
// target against the model: endogenous, value in range, no repeated target.
class Intervention {
 public:
  Intervention() = default;

  void add(const CausalModel& model, VarId target, ValueIndex value);
  bool sets(VarId v) const;
  std::optional<ValueIndex> value_for(VarId v) const;
  bool empty() const { return settings_.empty(); }
  std::size_t size() const { return settings_.size(); }
  const std::vector<std::pair<VarId, ValueIndex>>& settings() const { return settings_; }

  // Unchecked mutators for search loops whose settings are valid by
  // construction; the caller maintains the type's invariants.
  void clear() { settings_.clear(); }
  void push_unchecked(VarId target, ValueIndex value) { settings_.emplace_back(target, value); }

  static Intervention single(const CausalModel& model, VarId target, ValueIndex value);
  // b overrides a on shared targets.
  static Intervention compose(const CausalModel& model, const Intervention& a,
                              const Intervention& b);

  bool operator==(const Intervention&) const = default;

 private:
  std::vector<std::pair<VarId, ValueIndex>> settings_;
};

// ---------------------------------------------------------------------------
// Dependency graph
// ---------------------------------------------------------------------------

// Semantic dependence over all variables: edge y -> x iff some setting of the
// other arguments of x's equation makes the equation's output vary with y.
struct DependencyGraph {
  std::size_t var_count = 0;
  std::vector<std::vector<VarId>> parents;   // parents[x] = sorted list of y with y -> x
  std::vector<std::vector<VarId>> children;  // children[y] = sorted list of x with y -> x

  bool has_edge(VarId from, VarId to) const;
};

struct ModelLimits {
  int max_domain_size = 16;
  int max_variables = 25;
};

// ---------------------------------------------------------------------------
// CausalModel
// ---------------------------------------------------------------------------

class ModelBuilder;

class CausalModel {
 public:
  const std::string& name() const { return name_; }
  std::size_t var_count() const { return variables_.size(); }
  const Variable& variable(VarId v) const { return variables_[static_cast<std::size_t>(v)]; }
  const std::vector<Variable>& variables() const { return variables_; }
  std::optional<VarId> find(std::string_view name) const;

  bool is_endogenous(VarId v) const { return variable(v).kind == VarKind::Endogenous; }
  const std::vector<VarId>& exogenous() const { return exogenous_; }
  const std::vector<VarId>& endogenous() const { return endogenous_; }
  // Endogenous variables sorted by name; the canonical order for searches.
  const std::vector<VarId>& endogenous_by_name() const { return endogenous_by_name_; }

  // Defined for endogenous variables only.
  const Expr& equation(VarId target) const;
  // Topological order of the endogenous variables under semantic dependence.
  std::span<const VarId> evaluation_order() const { return eval_order_; }
  const DependencyGraph& dependencies() const { return deps_; }

  // Symbol table of non-integer domain value names (name -> numeric id).
  const std::vector<std::pair<std::string, Value>>& symbols() const { return symbols_; }

  // Unique solution of all equations in the given context. The context must
  // assign exactly the exogenous variables.
  Assignment solve(const Assignment& context) const;
  Assignment solve(const Assignment& context, const Intervention& intervention) const;
  // Allocation-free variant for search loops; reuses the caller's buffers.
  void solve_into(const Assignment& context, const Intervention* intervention,
                  std::vector<Value>& raw_scratch, Assignment& out) const;

  // New model with the targeted equations replaced by constants; this model
  // is left untouched. Later interventions override earlier ones.
  CausalModel intervened(const Intervention& intervention) const;

  void check_value(VarId v, ValueIndex idx) const;

  bool operator==(const CausalModel& other) const;

 private:
  friend class ModelBuilder;
  CausalModel() = default;

  void analyze();  // dependency graph + evaluation order + in-domain sweep

  std::string name_;
  std::vector<Variable> variables_;
  std::vector<std::optional<Expr>> equations_;  // indexed by VarId
  std::vector<VarId> exogenous_;
  std::vector<VarId> endogenous_;
  std::vector<VarId> endogenous_by_name_;
  std::vector<VarId> eval_order_;
  DependencyGraph deps_;
  std::vector<std::pair<std::string, Value>> symbols_;
  ModelLimits limits_;
};

// Incremental construction; build() enforces every model invariant and throws
// ModelError naming the violation.
class ModelBuilder {
 public:
  explicit ModelBuilder(std::string name, ModelLimits limits = {});

  VarId exogenous(const std::string& name, const std::vector<std::string>& values);
  VarId endogenous(const std::string& name, const std::vector<std::string>& values);
  void equation(VarId target, Expr body);

  std::optional<VarId> find(std::string_view name) const;
  // Numeric id for a domain-value name; registers symbols on first use.
  Value value_numeric(const std::string& value_name);
  std::optional<Value> lookup_symbol(std::string_view name) const;

  CausalModel build();

 private:
  VarId declare(const std::string& name, VarKind kind, const std::vector<std::string>& values);

  CausalModel model_;
  bool built_ = false;
};

}  // namespace causal
