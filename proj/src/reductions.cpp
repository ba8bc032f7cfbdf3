#include "causal/reductions.hpp"

#include <algorithm>

namespace causal {

PropFormula PropFormula::prop(int index) {
  if (index < 1) {
    throw std::invalid_argument("proposition indices start at 1");
  }
  PropFormula f;
  f.kind_ = Kind::Prop;
  f.prop_ = index;
  return f;
}

PropFormula PropFormula::conj(PropFormula a, PropFormula b) {
  PropFormula f;
  f.kind_ = Kind::And;
  f.kids_.reserve(2);
  f.kids_.push_back(std::move(a));
  f.kids_.push_back(std::move(b));
  return f;
}

PropFormula PropFormula::disj(PropFormula a, PropFormula b) {
  PropFormula f;
  f.kind_ = Kind::Or;
  f.kids_.reserve(2);
  f.kids_.push_back(std::move(a));
  f.kids_.push_back(std::move(b));
  return f;
}

PropFormula PropFormula::neg(PropFormula a) {
  PropFormula f;
  f.kind_ = Kind::Not;
  f.kids_.push_back(std::move(a));
  return f;
}

int PropFormula::max_prop() const {
  switch (kind_) {
    case Kind::Prop:
      return prop_;
    default: {
      int m = 0;
      for (const PropFormula& k : kids_) m = std::max(m, k.max_prop());
      return m;
    }
  }
}

bool PropFormula::eval(const std::vector<bool>& assignment) const {
  switch (kind_) {
    case Kind::Prop:
      return assignment[static_cast<std::size_t>(prop_ - 1)];
    case Kind::And:
      return kids_[0].eval(assignment) && kids_[1].eval(assignment);
    case Kind::Or:
      return kids_[0].eval(assignment) || kids_[1].eval(assignment);
    case Kind::Not:
      return !kids_[0].eval(assignment);
  }
  return false;
}

std::string PropFormula::to_string() const {
  switch (kind_) {
    case Kind::Prop:
      return "X" + std::to_string(prop_);
    case Kind::And:
      return "(" + kids_[0].to_string() + " & " + kids_[1].to_string() + ")";
    case Kind::Or:
      return "(" + kids_[0].to_string() + " | " + kids_[1].to_string() + ")";
    case Kind::Not:
      return "!" + kids_[0].to_string();
  }
  return "?";
}

namespace {

const std::vector<std::string> kBinaryDomain = {"0", "1"};

Expr to_expr(const PropFormula& phi, const std::vector<VarId>& prop_vars) {
  switch (phi.kind()) {
    case PropFormula::Kind::Prop:
      return Expr::var(prop_vars[static_cast<std::size_t>(phi.prop_index() - 1)]);
    case PropFormula::Kind::And:
      return Expr::logical_and(to_expr(phi.children()[0], prop_vars),
                               to_expr(phi.children()[1], prop_vars));
    case PropFormula::Kind::Or:
      return Expr::logical_or(to_expr(phi.children()[0], prop_vars),
                              to_expr(phi.children()[1], prop_vars));
    case PropFormula::Kind::Not:
      return Expr::logical_not(to_expr(phi.children()[0], prop_vars));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

ReductionInstance sat_model(const PropFormula& phi) {
  int n = phi.max_prop();
  ModelBuilder builder("sat_reduction");
  VarId u = builder.exogenous("U", kBinaryDomain);
  VarId x0 = builder.endogenous("X0", kBinaryDomain);
  std::vector<VarId> prop_vars;
  for (int i = 1; i <= n; ++i) {
    prop_vars.push_back(builder.endogenous("X" + std::to_string(i), kBinaryDomain));
  }
  VarId y = builder.endogenous("Y", kBinaryDomain);

  builder.equation(x0, Expr::var(u));
  for (VarId xi : prop_vars) {
    builder.equation(xi, Expr::var(x0));
  }
  builder.equation(y, Expr::logical_and(Expr::var(x0), to_expr(phi, prop_vars)));

  CausalModel model = builder.build();
  Assignment context(model.var_count());
  context.set(u, 0);
  CauseCandidate candidate =
      CauseCandidate::make(model, {PrimitiveEvent{x0, 0}});
  BoolFormula effect = BoolFormula::event(model, y, 0);
  return ReductionInstance{std::move(model), std::move(context), std::move(candidate),
                           std::move(effect)};
}

ReductionInstance unsat_model(const PropFormula& phi) {
  int n = phi.max_prop();
  ModelBuilder builder("unsat_reduction");
  VarId u = builder.exogenous("U", kBinaryDomain);
  std::vector<VarId> xs;
  for (int i = 0; i <= n + 1; ++i) {
    xs.push_back(builder.endogenous("X" + std::to_string(i), kBinaryDomain));
  }
  VarId y = builder.endogenous("Y", kBinaryDomain);

  for (VarId xi : xs) {
    builder.equation(xi, Expr::var(u));
  }
  std::vector<VarId> prop_vars(xs.begin() + 1, xs.begin() + 1 + n);
  Expr body = Expr::logical_and(
      Expr::logical_and(Expr::var(xs[0]), to_expr(phi, prop_vars)),
      Expr::logical_not(Expr::var(xs[static_cast<std::size_t>(n + 1)])));
  builder.equation(y, std::move(body));

  CausalModel model = builder.build();
  Assignment context(model.var_count());
  context.set(u, 0);
  std::vector<PrimitiveEvent> events;
  for (VarId xi : xs) {
    events.push_back(PrimitiveEvent{xi, 0});
  }
  CauseCandidate candidate = CauseCandidate::make(model, std::move(events));
  BoolFormula effect = BoolFormula::event(model, y, 0);
  return ReductionInstance{std::move(model), std::move(context), std::move(candidate),
                           std::move(effect)};
}

bool brute_force_sat(const PropFormula& phi, int max_props) {
  int n = phi.max_prop();
  if (n > max_props) {
    throw std::invalid_argument("formula exceeds the brute-force cap of " +
                                std::to_string(max_props) + " propositions");
  }
  std::vector<bool> assignment(static_cast<std::size_t>(n), false);
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (int i = 0; i < n; ++i) {
      assignment[static_cast<std::size_t>(i)] = (bits >> i) & 1;
    }
    if (phi.eval(assignment)) return true;
  }
  return false;
}

PropFormula random_prop_formula(std::mt19937_64& rng, int max_props, int max_depth) {
  if (max_props < 1) {
    throw std::invalid_argument("max_props must be at least 1");
  }
  // Plain modulo keeps the stream deterministic across platforms.
  auto pick = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  if (max_depth <= 0 || pick(100) < 30) {
    return PropFormula::prop(1 + pick(max_props));
  }
  int roll = pick(100);
  if (roll < 30) {
    return PropFormula::neg(random_prop_formula(rng, max_props, max_depth - 1));
  }
  PropFormula a = random_prop_formula(rng, max_props, max_depth - 1);
  PropFormula b = random_prop_formula(rng, max_props, max_depth - 1);
  if (roll < 65) {
    return PropFormula::conj(std::move(a), std::move(b));
  }
  return PropFormula::disj(std::move(a), std::move(b));
}

}  // namespace causal
