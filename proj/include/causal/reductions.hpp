// Constructions mapping propositional (un)satisfiability onto causality
// checks, used as a cross-validation harness: a formula is satisfiable iff
// the constructed candidate passes AC1 and AC2(a^m), and unsatisfiable iff
// the companion construction passes AC1 and AC3 under the modified
// definition. A brute-force SAT oracle keeps both honest.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "causal/engine.hpp"

namespace causal {

class PropFormula {
 public:
  enum class Kind : std::uint8_t { Prop, And, Or, Not };

  // Propositions are indexed from 1.
  static PropFormula prop(int index);
  static PropFormula conj(PropFormula a, PropFormula b);
  static PropFormula disj(PropFormula a, PropFormula b);
  static PropFormula neg(PropFormula a);

  Kind kind() const { return kind_; }
  int prop_index() const { return prop_; }
  const std::vector<PropFormula>& children() const { return kids_; }

  int max_prop() const;
  // assignment[i-1] is the truth value of proposition i.
  bool eval(const std::vector<bool>& assignment) const;
  std::string to_string() const;

 private:
  PropFormula() = default;

  Kind kind_ = Kind::Prop;
  int prop_ = 1;
  std::vector<PropFormula> kids_;
};

struct ReductionInstance {
  CausalModel model;
  Assignment context;      // the all-zero context
  CauseCandidate candidate;
  BoolFormula effect;
};

// Endogenous X0..Xn, Y with X0 = U, Xi = X0, Y = X0 & phi; candidate X0=0,
// effect Y=0 in context U=0. phi is satisfiable iff the candidate passes AC1
// and AC2(a^m).
ReductionInstance sat_model(const PropFormula& phi);

// Endogenous X0..X{n+1}, Y with Xi = U, Y = X0 & phi & !X{n+1}; candidate
// sets every Xi to 0, effect Y=0. phi is unsatisfiable iff the candidate
// passes AC1 and AC3 under the modified definition.
ReductionInstance unsat_model(const PropFormula& phi);

// Exhaustive assignment enumeration; throws std::invalid_argument when the
// formula has more than `max_props` propositions.
bool brute_force_sat(const PropFormula& phi, int max_props = 20);

// Seeded random formula for the fuzz harness; deterministic per generator
// state.
PropFormula random_prop_formula(std::mt19937_64& rng, int max_props, int max_depth);

}  // namespace causal
