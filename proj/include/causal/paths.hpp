// Path-based comparison definitions: causal paths over semantic dependence,
// reduction of a model along a path, Hitchcock's path-based definition, and
// Hall's H-account.

#pragma once

#include <optional>
#include <vector>

#include "causal/engine.hpp"

namespace causal {

// (Z_0, ..., Z_k) with consecutive semantic-dependence edges and no repeats.
using CausalPath = std::vector<VarId>;

// All simple dependence paths from `from` to `to`, in canonical order
// (depth-first with children visited in variable-name order). Both endpoints
// must be endogenous.
std::vector<CausalPath> causal_paths(const CausalModel& model, VarId from, VarId to);

// Off-path endogenous equations replaced by constants at their actual solved
// values. Solving the reduced model in the same context leaves every on-path
// variable unchanged.
CausalModel reduce_along_path(const CausalModel& model, const Assignment& context,
                              const CausalPath& path);

struct PathVerdict {
  bool is_cause = false;
  std::optional<CausalPath> path;       // certificate path when is_cause
  std::optional<Witness> witness;       // (W, w, x'); but-for style for hitchcock
  bool budget_exceeded = false;
  std::string detail;
};

// X=x causes Y=y iff X=x is a but-for cause of Y=y in the reduction of the
// model along some path from X to Y.
PathVerdict hitchcock_cause(const CausalModel& model, const Assignment& context,
                            const PrimitiveEvent& cause, const PrimitiveEvent& effect);

// X=x causes Y=y iff for some path and some setting w of variables W off that
// path, AC2(a) holds with (W, w, x') and every on-path variable keeps its
// actual value under [W <- w].
PathVerdict h_account_cause(const CausalModel& model, const Assignment& context,
                            const PrimitiveEvent& cause, const PrimitiveEvent& effect,
                            const SearchOptions& options = {});

}  // namespace causal
