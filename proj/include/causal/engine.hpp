// Deciding and enumerating actual causes. The three clause families AC1,
// AC2, AC3 are implemented as independent checks; witness search assembles
// them per definition variant and returns re-checkable certificates.
//
// The engine is a pure function of (model, context, query); all entry points
// are safe to call concurrently.

#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "causal/formula.hpp"

namespace causal {

enum class Variant : std::uint8_t { ButFor, Original, Updated, Modified };

const char* to_string(Variant variant);

// Conjunction of primitive events over distinct endogenous variables, kept in
// canonical order (sorted by variable name).
class CauseCandidate {
 public:
  static CauseCandidate make(const CausalModel& model, std::vector<PrimitiveEvent> events);

  const std::vector<PrimitiveEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool contains(VarId var) const;

  bool operator==(const CauseCandidate&) const = default;

 private:
  std::vector<PrimitiveEvent> events_;
};

// The AC2 certificate (W, w, x'): contingency variables with their values and
// the alternative setting of the candidate. Both lists are sorted by variable
// name. The empty-W witness is (∅, ∅, x').
struct Witness {
  std::vector<std::pair<VarId, ValueIndex>> w;
  std::vector<std::pair<VarId, ValueIndex>> x_prime;

  bool operator==(const Witness&) const = default;
};

enum class Clause : std::uint8_t { AC1, AC2, AC3 };

const char* to_string(Clause clause);

struct ClauseFailure {
  Clause clause = Clause::AC1;
  std::string detail;
  // For AC3 failures: the offending strict subset and its witness.
  std::optional<std::vector<PrimitiveEvent>> subset;
  std::optional<Witness> subset_witness;
};

enum class Outcome : std::uint8_t { Cause, NotCause, BudgetExceeded };

struct CauseVerdict {
  CauseCandidate candidate;
  BoolFormula effect;
  Variant variant = Variant::Modified;
  Outcome outcome = Outcome::NotCause;
  std::optional<Witness> witness;       // present when outcome == Cause
  std::optional<ClauseFailure> failure; // present when outcome == NotCause
  double elapsed_ms = 0.0;

  bool is_cause() const { return outcome == Outcome::Cause; }
};

struct SearchOptions {
  std::optional<std::chrono::milliseconds> budget;
};

// Thrown internally when a search exceeds its budget; public entry points
// that return verdicts convert it into Outcome::BudgetExceeded.
class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError() : std::runtime_error("search budget exceeded") {}
};

// --- Clause primitives ------------------------------------------------------

// AC1: the candidate and the effect both hold in the actual situation.
bool check_ac1(const CausalModel& model, const Assignment& context,
               const CauseCandidate& candidate, const BoolFormula& effect);

// AC2(a): [X <- x', W <- w] !effect.
bool check_ac2a(const CausalModel& model, const Assignment& context,
                const CauseCandidate& candidate, const BoolFormula& effect,
                const Witness& witness);

// AC2(b), also written AC2(b^o): for every subset Z' of Z = V \ W (minus the
// candidate), [X <- x, W <- w, Z' <- z] effect, with z the actual values.
// On failure, *counterexample (if given) names the offending Z'.
bool check_ac2b(const CausalModel& model, const Assignment& context,
                const CauseCandidate& candidate, const BoolFormula& effect,
                const Witness& witness, std::string* counterexample = nullptr);

// AC2(b^u): as AC2(b) but quantified over all subsets W' of W as well.
bool check_ac2bu(const CausalModel& model, const Assignment& context,
                 const CauseCandidate& candidate, const BoolFormula& effect,
                 const Witness& witness, std::string* counterexample = nullptr);

// AC2(a^m): with w the actual values of the given W, [X <- x', W <- w] !effect.
bool check_ac2am(const CausalModel& model, const Assignment& context,
                 const CauseCandidate& candidate, const BoolFormula& effect,
                 const std::vector<VarId>& witness_w_set,
                 const std::vector<std::pair<VarId, ValueIndex>>& x_prime);

// First witness in canonical order satisfying the variant's AC2 clauses:
// W by cardinality then lexicographic by variable name; within a W, the x'
// tuples (outer) and w tuples (inner) in lexicographic domain order.
// Throws BudgetExceededError when the budget runs out.
std::optional<Witness> find_witness(const CausalModel& model, const Assignment& context,
                                    const CauseCandidate& candidate, const BoolFormula& effect,
                                    Variant variant, const SearchOptions& options = {});

// AC3: no strict subset of the candidate satisfies AC1 and the variant's AC2.
bool check_ac3(const CausalModel& model, const Assignment& context,
               const CauseCandidate& candidate, const BoolFormula& effect, Variant variant,
               const SearchOptions& options = {}, ClauseFailure* failure = nullptr);

// --- Assembled definitions --------------------------------------------------

// Decides the candidate under the given variant. ButFor accepts singleton
// candidates only and throws std::invalid_argument otherwise.
CauseVerdict is_cause(const CausalModel& model, const Assignment& context,
                      const CauseCandidate& candidate, const BoolFormula& effect,
                      Variant variant, const SearchOptions& options = {});

// All causes with at most max_size conjuncts, in canonical order (size, then
// lexicographic by variable name). Candidates range over endogenous variables
// at their actual values, excluding variables mentioned by the effect.
std::vector<CauseVerdict> find_causes(const CausalModel& model, const Assignment& context,
                                      const BoolFormula& effect, Variant variant, int max_size,
                                      const SearchOptions& options = {});

struct PartOfCauseResult {
  bool is_part = false;
  std::optional<CauseVerdict> containing_cause;
  bool budget_exceeded = false;
};

// True iff some cause (any size) contains the event as a conjunct.
PartOfCauseResult is_part_of_cause(const CausalModel& model, const Assignment& context,
                                   const PrimitiveEvent& event, const BoolFormula& effect,
                                   Variant variant = Variant::Modified,
                                   const SearchOptions& options = {});

}  // namespace causal
