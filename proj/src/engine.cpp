#include "causal/engine.hpp"

#include <algorithm>
#include <chrono>

namespace causal {

const char* to_string(Variant variant) {
  switch (variant) {
    case Variant::ButFor: return "butfor";
    case Variant::Original: return "original";
    case Variant::Updated: return "updated";
    case Variant::Modified: return "modified";
  }
  return "?";
}

const char* to_string(Clause clause) {
  switch (clause) {
    case Clause::AC1: return "AC1";
    case Clause::AC2: return "AC2";
    case Clause::AC3: return "AC3";
  }
  return "?";
}

CauseCandidate CauseCandidate::make(const CausalModel& model,
                                    std::vector<PrimitiveEvent> events) {
  if (events.empty()) {
    throw std::invalid_argument("a cause candidate needs at least one conjunct");
  }
  for (PrimitiveEvent& ev : events) {
    ev = make_event(model, ev.var, ev.value);  // re-validates
  }
  std::sort(events.begin(), events.end(), [&](const PrimitiveEvent& a, const PrimitiveEvent& b) {
    return model.variable(a.var).name < model.variable(b.var).name;
  });
  for (std::size_t i = 1; i < events.size(); ++i) {
    if (events[i].var == events[i - 1].var) {
      throw std::invalid_argument("candidate repeats variable '" +
                                  model.variable(events[i].var).name + "'");
    }
  }
  CauseCandidate c;
  c.events_ = std::move(events);
  return c;
}

bool CauseCandidate::contains(VarId var) const {
  return std::any_of(events_.begin(), events_.end(),
                     [var](const PrimitiveEvent& ev) { return ev.var == var; });
}

namespace {

using Settings = std::vector<std::pair<VarId, ValueIndex>>;

// Shared state for one query: scratch buffers, the solved actual world, and
// the optional deadline. holds() is the only way the search inspects the
// model, so the budget check lives there.
class Search {
 public:
  Search(const CausalModel& model, const Assignment& context, const SearchOptions& options)
      : model_(model), context_(context) {
    if (options.budget) {
      deadline_ = std::chrono::steady_clock::now() + *options.budget;
    }
    actual_ = model.solve(context);
  }

  const CausalModel& model() const { return model_; }
  const Assignment& actual() const { return actual_; }

  bool holds(const Intervention& intervention, const BoolFormula& formula) {
    ++holds_count_;
    if (deadline_ && std::chrono::steady_clock::now() > *deadline_) {
      throw BudgetExceededError();
    }
    model_.solve_into(context_, &intervention, raw_scratch_, solution_scratch_);
    return formula.eval(solution_scratch_);
  }

  Intervention& scratch_intervention() {
    iv_.clear();
    return iv_;
  }

 private:
  const CausalModel& model_;
  const Assignment& context_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t holds_count_ = 0;
  Assignment actual_;
  std::vector<Value> raw_scratch_;
  Assignment solution_scratch_;
  Intervention iv_;
};

void push_candidate(Intervention& iv, const CauseCandidate& candidate,
                    std::span<const ValueIndex> values) {
  for (std::size_t i = 0; i < candidate.events().size(); ++i) {
    iv.push_unchecked(candidate.events()[i].var, values[i]);
  }
}

std::vector<ValueIndex> candidate_values(const CauseCandidate& candidate) {
  std::vector<ValueIndex> v;
  v.reserve(candidate.size());
  for (const PrimitiveEvent& ev : candidate.events()) v.push_back(ev.value);
  return v;
}

// Lexicographic odometer over the domains of `vars`, as value indices.
// Returns false when the sequence wraps around.
bool next_tuple(const CausalModel& model, const std::vector<VarId>& vars,
                std::vector<ValueIndex>& tuple) {
  for (std::size_t i = vars.size(); i-- > 0;) {
    std::size_t domain_size = model.variable(vars[i]).domain.size();
    if (static_cast<std::size_t>(++tuple[i]) < domain_size) return true;
    tuple[i] = 0;
  }
  return false;
}

// All variables of the candidate, as a vector (candidate order = name order).
std::vector<VarId> candidate_vars(const CauseCandidate& candidate) {
  std::vector<VarId> vars;
  vars.reserve(candidate.size());
  for (const PrimitiveEvent& ev : candidate.events()) vars.push_back(ev.var);
  return vars;
}

// Endogenous variables (name order) outside the candidate.
std::vector<VarId> witness_pool(const CausalModel& model, const CauseCandidate& candidate) {
  std::vector<VarId> pool;
  for (VarId v : model.endogenous_by_name()) {
    if (!candidate.contains(v)) pool.push_back(v);
  }
  return pool;
}

// Visits k-subsets of `pool` in lexicographic order; fn may return true to
// stop. Returns whether fn stopped the enumeration.
template <typename Fn>
bool for_each_combination(const std::vector<VarId>& pool, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > pool.size()) return false;
  while (true) {
    std::vector<VarId> subset;
    subset.reserve(k);
    for (std::size_t i : idx) subset.push_back(pool[i]);
    if (fn(subset)) return true;
    // Advance the combination.
    std::size_t i = k;
    while (i-- > 0) {
      if (idx[i] + (k - i) < pool.size()) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return false;
    }
    if (k == 0) return false;
  }
}

// Visits every bitmask-subset of `pool` (including the empty one).
template <typename Fn>
bool for_each_mask_subset(const std::vector<VarId>& pool, Fn&& fn) {
  if (pool.size() >= 63) {
    throw std::invalid_argument("subset enumeration over more than 62 variables");
  }
  std::uint64_t end = std::uint64_t{1} << pool.size();
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    if (fn(mask)) return true;
  }
  return false;
}

std::string settings_text(const CausalModel& model, const Settings& settings) {
  std::string out = "{";
  bool first = true;
  for (const auto& [var, idx] : settings) {
    if (!first) out += ", ";
    first = false;
    out += model.variable(var).name + "=" +
           model.variable(var).domain[static_cast<std::size_t>(idx)].name;
  }
  out += "}";
  return out;
}

// AC2(b) / AC2(b^u) sufficiency core. The candidate is held at its stated
// values x, W (or each subset of it for the updated variant) at w, and every
// subset Z' of the remaining endogenous variables at its actual values.
bool sufficiency(Search& search, const CauseCandidate& candidate, const BoolFormula& effect,
                 const std::vector<VarId>& w_vars, const std::vector<ValueIndex>& w_values,
                 bool quantify_w_subsets, std::string* counterexample) {
  const CausalModel& model = search.model();
  std::vector<VarId> rest;  // Z \ X
  for (VarId v : model.endogenous_by_name()) {
    if (candidate.contains(v)) continue;
    if (std::find(w_vars.begin(), w_vars.end(), v) != w_vars.end()) continue;
    rest.push_back(v);
  }
  std::vector<ValueIndex> x_actual = candidate_values(candidate);

  bool ok = true;
  for_each_mask_subset(w_vars, [&](std::uint64_t w_mask) {
    if (!quantify_w_subsets && w_mask + 1 != (std::uint64_t{1} << w_vars.size())) {
      return false;  // AC2(b) uses the full W only
    }
    return for_each_mask_subset(rest, [&](std::uint64_t z_mask) {
      Intervention& iv = search.scratch_intervention();
      push_candidate(iv, candidate, x_actual);
      for (std::size_t i = 0; i < w_vars.size(); ++i) {
        if (w_mask >> i & 1) iv.push_unchecked(w_vars[i], w_values[i]);
      }
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (z_mask >> i & 1) iv.push_unchecked(rest[i], search.actual().get(rest[i]));
      }
      if (search.holds(iv, effect)) return false;
      ok = false;
      if (counterexample != nullptr) {
        Settings w_part, z_part;
        for (std::size_t i = 0; i < w_vars.size(); ++i) {
          if (w_mask >> i & 1) w_part.emplace_back(w_vars[i], w_values[i]);
        }
        for (std::size_t i = 0; i < rest.size(); ++i) {
          if (z_mask >> i & 1) z_part.emplace_back(rest[i], search.actual().get(rest[i]));
        }
        *counterexample = (quantify_w_subsets ? "W' = " + settings_text(model, w_part) + ", " : "") +
                          "Z' = " + settings_text(model, z_part) +
                          " keeps the candidate from being sufficient";
      }
      return true;
    });
  });
  return ok;
}

// AC2(a): [X <- x', W <- w] !effect.
bool necessity(Search& search, const CauseCandidate& candidate, const BoolFormula& not_effect,
               const std::vector<VarId>& w_vars, const std::vector<ValueIndex>& w_values,
               std::span<const ValueIndex> x_prime) {
  Intervention& iv = search.scratch_intervention();
  push_candidate(iv, candidate, x_prime);
  for (std::size_t i = 0; i < w_vars.size(); ++i) {
    iv.push_unchecked(w_vars[i], w_values[i]);
  }
  return search.holds(iv, not_effect);
}

Witness make_witness(const std::vector<VarId>& w_vars, const std::vector<ValueIndex>& w_values,
                     const CauseCandidate& candidate, std::span<const ValueIndex> x_prime) {
  Witness w;
  for (std::size_t i = 0; i < w_vars.size(); ++i) {
    w.w.emplace_back(w_vars[i], w_values[i]);
  }
  for (std::size_t i = 0; i < candidate.events().size(); ++i) {
    w.x_prime.emplace_back(candidate.events()[i].var, x_prime[i]);
  }
  return w;
}

// Canonical search over (W, x', w) for the variant's full AC2.
std::optional<Witness> find_witness_impl(Search& search, const CauseCandidate& candidate,
                                         const BoolFormula& effect, Variant variant) {
  const CausalModel& model = search.model();
  BoolFormula not_effect = BoolFormula::negation(effect);
  std::vector<VarId> pool = witness_pool(model, candidate);
  std::vector<VarId> cand_vars = candidate_vars(candidate);
  std::vector<ValueIndex> x_actual = candidate_values(candidate);

  std::optional<Witness> result;
  for (std::size_t k = 0; k <= pool.size() && !result; ++k) {
    for_each_combination(pool, k, [&](const std::vector<VarId>& w_vars) {
      std::vector<ValueIndex> w_actual;
      w_actual.reserve(w_vars.size());
      for (VarId v : w_vars) w_actual.push_back(search.actual().get(v));

      // x' tuples: lexicographic, skipping the candidate's own values.
      std::vector<ValueIndex> x_prime(cand_vars.size(), 0);
      do {
        if (std::equal(x_prime.begin(), x_prime.end(), x_actual.begin())) continue;
        if (variant == Variant::Modified) {
          if (necessity(search, candidate, not_effect, w_vars, w_actual, x_prime)) {
            result = make_witness(w_vars, w_actual, candidate, x_prime);
            return true;
          }
        } else {
          std::vector<ValueIndex> w_values(w_vars.size(), 0);
          bool more_w = true;
          while (more_w) {
            if (necessity(search, candidate, not_effect, w_vars, w_values, x_prime) &&
                sufficiency(search, candidate, effect, w_vars, w_values,
                            variant == Variant::Updated, nullptr)) {
              result = make_witness(w_vars, w_values, candidate, x_prime);
              return true;
            }
            more_w = !w_vars.empty() && next_tuple(model, w_vars, w_values);
          }
          if (w_vars.empty()) continue;  // single empty-w iteration done
        }
      } while (next_tuple(model, cand_vars, x_prime));
      return false;
    });
  }
  return result;
}

std::vector<PrimitiveEvent> subset_events(const CauseCandidate& candidate, std::uint64_t mask) {
  std::vector<PrimitiveEvent> events;
  for (std::size_t i = 0; i < candidate.events().size(); ++i) {
    if (mask >> i & 1) events.push_back(candidate.events()[i]);
  }
  return events;
}

// AC3 core: looks for a nonempty strict subset of the candidate satisfying
// the variant's AC2, smallest subsets first.
bool ac3_impl(Search& search, const CauseCandidate& candidate, const BoolFormula& effect,
              Variant variant, ClauseFailure* failure) {
  const std::size_t n = candidate.size();
  if (n <= 1) return true;
  std::vector<std::uint64_t> masks;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    masks.push_back(mask);
  }
  std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    return __builtin_popcountll(a) < __builtin_popcountll(b);
  });
  for (std::uint64_t mask : masks) {
    CauseCandidate sub = CauseCandidate::make(search.model(), subset_events(candidate, mask));
    auto witness = find_witness_impl(search, sub, effect, variant);
    if (witness) {
      if (failure != nullptr) {
        failure->clause = Clause::AC3;
        failure->detail = "a strict subset of the candidate already satisfies AC1 and AC2";
        failure->subset = sub.events();
        failure->subset_witness = *witness;
      }
      return false;
    }
  }
  return true;
}

bool ac1_impl(Search& search, const CauseCandidate& candidate, const BoolFormula& effect,
              std::string* why) {
  for (const PrimitiveEvent& ev : candidate.events()) {
    if (search.actual().get(ev.var) != ev.value) {
      if (why != nullptr) {
        *why = "the candidate does not hold in the actual context";
      }
      return false;
    }
  }
  if (!effect.eval(search.actual())) {
    if (why != nullptr) {
      *why = "the effect does not hold in the actual context";
    }
    return false;
  }
  return true;
}

void validate_effect(const CausalModel& model, const BoolFormula& effect) {
  std::vector<char> seen(model.var_count(), 0);
  effect.collect_vars(seen);
}

}  // namespace

// ---------------------------------------------------------------------------
// Public clause checks
// ---------------------------------------------------------------------------

bool check_ac1(const CausalModel& model, const Assignment& context,
               const CauseCandidate& candidate, const BoolFormula& effect) {
  validate_effect(model, effect);
  Search search(model, context, {});
  return ac1_impl(search, candidate, effect, nullptr);
}

bool check_ac2a(const CausalModel& model, const Assignment& context,
                const CauseCandidate& candidate, const BoolFormula& effect,
                const Witness& witness) {
  validate_effect(model, effect);
  Search search(model, context, {});
  BoolFormula not_effect = BoolFormula::negation(effect);
  std::vector<VarId> w_vars;
  std::vector<ValueIndex> w_values;
  for (const auto& [var, idx] : witness.w) {
    w_vars.push_back(var);
    w_values.push_back(idx);
  }
  std::vector<ValueIndex> x_prime;
  for (const auto& [var, idx] : witness.x_prime) {
    (void)var;
    x_prime.push_back(idx);
  }
  return necessity(search, candidate, not_effect, w_vars, w_values, x_prime);
}

bool check_ac2b(const CausalModel& model, const Assignment& context,
                const CauseCandidate& candidate, const BoolFormula& effect,
                const Witness& witness, std::string* counterexample) {
  validate_effect(model, effect);
  Search search(model, context, {});
  std::vector<VarId> w_vars;
  std::vector<ValueIndex> w_values;
  for (const auto& [var, idx] : witness.w) {
    w_vars.push_back(var);
    w_values.push_back(idx);
  }
  return sufficiency(search, candidate, effect, w_vars, w_values, false, counterexample);
}

bool check_ac2bu(const CausalModel& model, const Assignment& context,
                 const CauseCandidate& candidate, const BoolFormula& effect,
                 const Witness& witness, std::string* counterexample) {
  validate_effect(model, effect);
  Search search(model, context, {});
  std::vector<VarId> w_vars;
  std::vector<ValueIndex> w_values;
  for (const auto& [var, idx] : witness.w) {
    w_vars.push_back(var);
    w_values.push_back(idx);
  }
  return sufficiency(search, candidate, effect, w_vars, w_values, true, counterexample);
}

bool check_ac2am(const CausalModel& model, const Assignment& context,
                 const CauseCandidate& candidate, const BoolFormula& effect,
                 const std::vector<VarId>& witness_w_set,
                 const std::vector<std::pair<VarId, ValueIndex>>& x_prime) {
  validate_effect(model, effect);
  Search search(model, context, {});
  BoolFormula not_effect = BoolFormula::negation(effect);
  std::vector<ValueIndex> w_actual;
  for (VarId v : witness_w_set) {
    if (candidate.contains(v)) {
      throw std::invalid_argument("witness set W overlaps the candidate");
    }
    w_actual.push_back(search.actual().get(v));
  }
  std::vector<ValueIndex> x_values;
  for (const PrimitiveEvent& ev : candidate.events()) {
    bool found = false;
    for (const auto& [var, idx] : x_prime) {
      if (var == ev.var) {
        x_values.push_back(idx);
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("x' does not assign every candidate variable");
    }
  }
  return necessity(search, candidate, not_effect, witness_w_set, w_actual, x_values);
}

std::optional<Witness> find_witness(const CausalModel& model, const Assignment& context,
                                    const CauseCandidate& candidate, const BoolFormula& effect,
                                    Variant variant, const SearchOptions& options) {
  if (variant == Variant::ButFor) {
    throw std::invalid_argument("find_witness expects original, updated, or modified, not butfor");
  }
  validate_effect(model, effect);
  Search search(model, context, options);
  return find_witness_impl(search, candidate, effect, variant);
}

bool check_ac3(const CausalModel& model, const Assignment& context,
               const CauseCandidate& candidate, const BoolFormula& effect, Variant variant,
               const SearchOptions& options, ClauseFailure* failure) {
  if (variant == Variant::ButFor) {
    return true;  // but-for causes are single conjuncts; minimality is vacuous
  }
  validate_effect(model, effect);
  Search search(model, context, options);
  return ac3_impl(search, candidate, effect, variant, failure);
}

// ---------------------------------------------------------------------------
// Assembled definitions
// ---------------------------------------------------------------------------

namespace {

CauseVerdict verdict_shell(const CauseCandidate& candidate, const BoolFormula& effect,
                           Variant variant) {
  return CauseVerdict{candidate, effect, variant, Outcome::NotCause,
                      std::nullopt, std::nullopt, 0.0};
}

double elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

CauseVerdict is_cause(const CausalModel& model, const Assignment& context,
                      const CauseCandidate& candidate, const BoolFormula& effect,
                      Variant variant, const SearchOptions& options) {
  if (variant == Variant::ButFor && candidate.size() != 1) {
    throw std::invalid_argument("a but-for cause is a single conjunct");
  }
  validate_effect(model, effect);
  auto start = std::chrono::steady_clock::now();
  CauseVerdict verdict = verdict_shell(candidate, effect, variant);
  try {
    Search search(model, context, options);
    std::string why;
    if (!ac1_impl(search, candidate, effect, &why)) {
      verdict.failure = ClauseFailure{Clause::AC1, why, std::nullopt, std::nullopt};
      verdict.elapsed_ms = elapsed_ms_since(start);
      return verdict;
    }
    if (variant == Variant::ButFor) {
      BoolFormula not_effect = BoolFormula::negation(effect);
      const PrimitiveEvent& ev = candidate.events()[0];
      const Variable& var = model.variable(ev.var);
      std::optional<Witness> witness;
      for (std::size_t alt = 0; alt < var.domain.size() && !witness; ++alt) {
        ValueIndex x_prime = static_cast<ValueIndex>(alt);
        if (x_prime == ev.value) continue;
        std::vector<ValueIndex> tuple{x_prime};
        if (necessity(search, candidate, not_effect, {}, {}, tuple)) {
          witness = make_witness({}, {}, candidate, tuple);
        }
      }
      if (witness) {
        verdict.outcome = Outcome::Cause;
        verdict.witness = std::move(witness);
      } else {
        verdict.failure = ClauseFailure{
            Clause::AC2, "no alternative value of the candidate flips the effect",
            std::nullopt, std::nullopt};
      }
      verdict.elapsed_ms = elapsed_ms_since(start);
      return verdict;
    }

    auto witness = find_witness_impl(search, candidate, effect, variant);
    if (!witness) {
      std::string detail;
      switch (variant) {
        case Variant::Original: detail = "no witness satisfies AC2(a) and AC2(b)"; break;
        case Variant::Updated: detail = "no witness satisfies AC2(a) and AC2(b^u)"; break;
        default: detail = "no witness satisfies AC2(a^m)"; break;
      }
      verdict.failure = ClauseFailure{Clause::AC2, detail, std::nullopt, std::nullopt};
      verdict.elapsed_ms = elapsed_ms_since(start);
      return verdict;
    }
    ClauseFailure ac3_failure;
    if (!ac3_impl(search, candidate, effect, variant, &ac3_failure)) {
      verdict.failure = std::move(ac3_failure);
      verdict.elapsed_ms = elapsed_ms_since(start);
      return verdict;
    }
    verdict.outcome = Outcome::Cause;
    verdict.witness = std::move(witness);
  } catch (const BudgetExceededError&) {
    verdict.outcome = Outcome::BudgetExceeded;
    verdict.witness.reset();
    verdict.failure.reset();
  }
  verdict.elapsed_ms = elapsed_ms_since(start);
  return verdict;
}

std::vector<CauseVerdict> find_causes(const CausalModel& model, const Assignment& context,
                                      const BoolFormula& effect, Variant variant, int max_size,
                                      const SearchOptions& options) {
  if (max_size < 1) {
    throw std::invalid_argument("max_size must be at least 1");
  }
  validate_effect(model, effect);
  std::vector<CauseVerdict> causes;
  Search search(model, context, options);
  if (!effect.eval(search.actual())) {
    return causes;  // AC1 can never hold
  }

  // Candidates range over endogenous variables outside the effect, at their
  // actual values.
  std::vector<char> in_effect(model.var_count(), 0);
  effect.collect_vars(in_effect);
  std::vector<VarId> pool;
  for (VarId v : model.endogenous_by_name()) {
    if (!in_effect[static_cast<std::size_t>(v)]) pool.push_back(v);
  }

  std::vector<std::vector<VarId>> found_sets;
  auto start = std::chrono::steady_clock::now();
  std::size_t limit = std::min<std::size_t>(static_cast<std::size_t>(max_size), pool.size());
  if (variant == Variant::ButFor) limit = std::min<std::size_t>(limit, 1);

  for (std::size_t k = 1; k <= limit; ++k) {
    for_each_combination(pool, k, [&](const std::vector<VarId>& vars) {
      // Minimality prune: a cause strictly inside this candidate means AC3
      // must fail, and every AC2-satisfying subset contains a minimal cause
      // that was already enumerated.
      std::vector<VarId> vars_sorted = vars;
      std::sort(vars_sorted.begin(), vars_sorted.end());
      for (const std::vector<VarId>& prior : found_sets) {
        if (std::includes(vars_sorted.begin(), vars_sorted.end(), prior.begin(), prior.end())) {
          return false;
        }
      }
      std::vector<PrimitiveEvent> events;
      events.reserve(vars.size());
      for (VarId v : vars) {
        events.push_back(PrimitiveEvent{v, search.actual().get(v)});
      }
      CauseCandidate candidate = CauseCandidate::make(model, std::move(events));

      std::optional<Witness> witness;
      if (variant == Variant::ButFor) {
        BoolFormula not_effect = BoolFormula::negation(effect);
        const PrimitiveEvent& ev = candidate.events()[0];
        for (std::size_t alt = 0; alt < model.variable(ev.var).domain.size() && !witness; ++alt) {
          ValueIndex x_prime = static_cast<ValueIndex>(alt);
          if (x_prime == ev.value) continue;
          std::vector<ValueIndex> tuple{x_prime};
          if (necessity(search, candidate, not_effect, {}, {}, tuple)) {
            witness = make_witness({}, {}, candidate, tuple);
          }
        }
      } else {
        witness = find_witness_impl(search, candidate, effect, variant);
      }
      if (witness) {
        std::vector<VarId> sorted_vars = vars;
        std::sort(sorted_vars.begin(), sorted_vars.end());
        found_sets.push_back(std::move(sorted_vars));
        CauseVerdict verdict = verdict_shell(candidate, effect, variant);
        verdict.outcome = Outcome::Cause;
        verdict.witness = std::move(witness);
        verdict.elapsed_ms = elapsed_ms_since(start);
        causes.push_back(std::move(verdict));
      }
      return false;
    });
  }
  return causes;
}

PartOfCauseResult is_part_of_cause(const CausalModel& model, const Assignment& context,
                                   const PrimitiveEvent& event, const BoolFormula& effect,
                                   Variant variant, const SearchOptions& options) {
  PrimitiveEvent checked = make_event(model, event.var, event.value);
  PartOfCauseResult result;
  try {
    std::vector<CauseVerdict> causes =
        find_causes(model, context, effect, variant,
                    static_cast<int>(model.endogenous().size()), options);
    for (CauseVerdict& verdict : causes) {
      for (const PrimitiveEvent& ev : verdict.candidate.events()) {
        if (ev == checked) {
          result.is_part = true;
          result.containing_cause = std::move(verdict);
          return result;
        }
      }
    }
  } catch (const BudgetExceededError&) {
    result.budget_exceeded = true;
  }
  return result;
}

}  // namespace causal
