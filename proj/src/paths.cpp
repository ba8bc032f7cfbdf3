#include "causal/paths.hpp"

#include <algorithm>
#include <chrono>

namespace causal {

namespace {

void require_endogenous(const CausalModel& model, VarId v, const char* role) {
  if (v < 0 || static_cast<std::size_t>(v) >= model.var_count() || !model.is_endogenous(v)) {
    throw std::invalid_argument(std::string(role) + " must be an endogenous variable");
  }
}

void dfs_paths(const CausalModel& model, VarId current, VarId target,
               std::vector<VarId>& stack, std::vector<char>& on_stack,
               std::vector<CausalPath>& out) {
  if (current == target) {
    out.push_back(stack);
    return;
  }
  // Children in variable-name order keeps the enumeration canonical.
  std::vector<VarId> kids = model.dependencies().children[static_cast<std::size_t>(current)];
  std::sort(kids.begin(), kids.end(), [&](VarId a, VarId b) {
    return model.variable(a).name < model.variable(b).name;
  });
  for (VarId next : kids) {
    if (!model.is_endogenous(next) || on_stack[static_cast<std::size_t>(next)]) continue;
    stack.push_back(next);
    on_stack[static_cast<std::size_t>(next)] = 1;
    dfs_paths(model, next, target, stack, on_stack, out);
    stack.pop_back();
    on_stack[static_cast<std::size_t>(next)] = 0;
  }
}

}  // namespace

std::vector<CausalPath> causal_paths(const CausalModel& model, VarId from, VarId to) {
  require_endogenous(model, from, "path source");
  require_endogenous(model, to, "path target");
  std::vector<CausalPath> out;
  std::vector<VarId> stack{from};
  std::vector<char> on_stack(model.var_count(), 0);
  on_stack[static_cast<std::size_t>(from)] = 1;
  dfs_paths(model, from, to, stack, on_stack, out);
  return out;
}

CausalModel reduce_along_path(const CausalModel& model, const Assignment& context,
                              const CausalPath& path) {
  if (path.empty()) {
    throw std::invalid_argument("path must not be empty");
  }
  std::vector<char> on_path(model.var_count(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    require_endogenous(model, path[i], "path member");
    if (on_path[static_cast<std::size_t>(path[i])]) {
      throw std::invalid_argument("path repeats a variable");
    }
    on_path[static_cast<std::size_t>(path[i])] = 1;
    if (i > 0 && !model.dependencies().has_edge(path[i - 1], path[i])) {
      throw std::invalid_argument("'" + model.variable(path[i]).name +
                                  "' does not depend on '" + model.variable(path[i - 1]).name +
                                  "'");
    }
  }
  Assignment actual = model.solve(context);
  Intervention freeze;
  for (VarId v : model.endogenous()) {
    if (!on_path[static_cast<std::size_t>(v)]) {
      freeze.add(model, v, actual.get(v));
    }
  }
  return model.intervened(freeze);
}

PathVerdict hitchcock_cause(const CausalModel& model, const Assignment& context,
                            const PrimitiveEvent& cause, const PrimitiveEvent& effect) {
  PrimitiveEvent x = make_event(model, cause.var, cause.value);
  PrimitiveEvent y = make_event(model, effect.var, effect.value);
  PathVerdict verdict;

  Assignment actual = model.solve(context);
  if (actual.get(x.var) != x.value || actual.get(y.var) != y.value) {
    verdict.detail = "the candidate or the effect does not hold in the actual context";
    return verdict;
  }
  if (x.var == y.var) {
    verdict.detail = "cause and effect are the same variable";
    return verdict;
  }

  BoolFormula effect_formula = BoolFormula::event(y);
  for (const CausalPath& path : causal_paths(model, x.var, y.var)) {
    CausalModel reduced = reduce_along_path(model, context, path);
    const Variable& var = reduced.variable(x.var);
    for (std::size_t alt = 0; alt < var.domain.size(); ++alt) {
      ValueIndex x_prime = static_cast<ValueIndex>(alt);
      if (x_prime == x.value) continue;
      Assignment counterfactual =
          reduced.solve(context, Intervention::single(reduced, x.var, x_prime));
      if (!effect_formula.eval(counterfactual)) {
        verdict.is_cause = true;
        verdict.path = path;
        Witness w;
        w.x_prime.emplace_back(x.var, x_prime);
        verdict.witness = std::move(w);
        return verdict;
      }
    }
  }
  verdict.detail = "no path makes the candidate a but-for cause in the reduced model";
  return verdict;
}

PathVerdict h_account_cause(const CausalModel& model, const Assignment& context,
                            const PrimitiveEvent& cause, const PrimitiveEvent& effect,
                            const SearchOptions& options) {
  PrimitiveEvent x = make_event(model, cause.var, cause.value);
  PrimitiveEvent y = make_event(model, effect.var, effect.value);
  PathVerdict verdict;

  Assignment actual = model.solve(context);
  if (actual.get(x.var) != x.value || actual.get(y.var) != y.value) {
    verdict.detail = "the candidate or the effect does not hold in the actual context";
    return verdict;
  }
  if (x.var == y.var) {
    verdict.detail = "cause and effect are the same variable";
    return verdict;
  }

  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (options.budget) {
    deadline = std::chrono::steady_clock::now() + *options.budget;
  }
  auto tick = [&]() {
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      throw BudgetExceededError();
    }
  };

  BoolFormula not_effect = BoolFormula::negation(BoolFormula::event(y));
  try {
    for (const CausalPath& path : causal_paths(model, x.var, y.var)) {
      std::vector<char> on_path(model.var_count(), 0);
      for (VarId v : path) on_path[static_cast<std::size_t>(v)] = 1;
      std::vector<VarId> pool;
      for (VarId v : model.endogenous_by_name()) {
        if (!on_path[static_cast<std::size_t>(v)]) pool.push_back(v);
      }

      // Canonical witness ordering: W by cardinality then name, x' outer and
      // w inner, lexicographic by domain order.
      for (std::size_t k = 0; k <= pool.size(); ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        if (k > pool.size()) break;
        bool more_subsets = true;
        while (more_subsets) {
          std::vector<VarId> w_vars;
          w_vars.reserve(k);
          for (std::size_t i : idx) w_vars.push_back(pool[i]);

          const Variable& xv = model.variable(x.var);
          for (std::size_t alt = 0; alt < xv.domain.size(); ++alt) {
            ValueIndex x_prime = static_cast<ValueIndex>(alt);
            if (x_prime == x.value) continue;
            std::vector<ValueIndex> w_values(w_vars.size(), 0);
            bool more_w = true;
            while (more_w) {
              tick();
              Intervention w_only;
              for (std::size_t i = 0; i < w_vars.size(); ++i) {
                w_only.push_unchecked(w_vars[i], w_values[i]);
              }
              // Every on-path variable must keep its actual value under W <- w.
              Assignment frozen = model.solve(context, w_only);
              bool stable = true;
              for (VarId v : path) {
                if (frozen.get(v) != actual.get(v)) {
                  stable = false;
                  break;
                }
              }
              if (stable) {
                Intervention full = w_only;
                full.push_unchecked(x.var, x_prime);
                Assignment counterfactual = model.solve(context, full);
                if (not_effect.eval(counterfactual)) {
                  verdict.is_cause = true;
                  verdict.path = path;
                  Witness w;
                  for (std::size_t i = 0; i < w_vars.size(); ++i) {
                    w.w.emplace_back(w_vars[i], w_values[i]);
                  }
                  w.x_prime.emplace_back(x.var, x_prime);
                  verdict.witness = std::move(w);
                  return verdict;
                }
              }
              more_w = !w_vars.empty() && [&] {
                for (std::size_t i = w_vars.size(); i-- > 0;) {
                  std::size_t domain_size = model.variable(w_vars[i]).domain.size();
                  if (static_cast<std::size_t>(++w_values[i]) < domain_size) return true;
                  w_values[i] = 0;
                }
                return false;
              }();
            }
          }

          // Advance the k-combination.
          more_subsets = false;
          for (std::size_t i = k; i-- > 0;) {
            if (idx[i] + (k - i) < pool.size()) {
              ++idx[i];
              for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
              more_subsets = true;
              break;
            }
          }
          if (k == 0) break;
        }
      }
    }
  } catch (const BudgetExceededError&) {
    verdict.budget_exceeded = true;
    return verdict;
  }
  verdict.detail = "no path admits a contingency that preserves the path's actual values";
  return verdict;
}

}  // namespace causal
