// Built-in fixture corpus: one fixture per scenario, each carrying its model
// source text, a context, and golden checks (query text plus the expected
// result and a note explaining why the expectation is trusted). Also the
// seeded random-model generator behind the property suites.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "causal/dsl.hpp"

namespace causal::corpus {

struct GoldenCheck {
  std::string query;                         // full query text, context inline
  bool expected = false;                     // Cause / PartOf queries
  std::vector<std::string> expected_causes;  // Causes queries: canonical candidates
  std::string note;                          // scenario rationale or oracle tag
};

struct Fixture {
  std::string name;
  std::string model_text;
  std::string context_text;  // the fixture's primary context
  std::vector<GoldenCheck> checks;
};

const std::vector<Fixture>& builtin_fixtures();

struct GoldenOutcome {
  int checks = 0;
  int failures = 0;
  std::vector<std::string> failure_lines;

  bool ok() const { return failures == 0; }
};

// Runs every golden check; when `out` is non-null, prints one line per check
// and a summary.
GoldenOutcome run_golden_checks(std::ostream* out);

// Writes NAME.scm-model (and one .scm-query per check) under dir.
void write_fixture_files(const std::string& dir);

// ---------------------------------------------------------------------------
// Seeded random models
// ---------------------------------------------------------------------------

struct GeneratorParams {
  std::uint64_t seed = 1;
  int endogenous = 5;
  int exogenous = 2;
  int max_fan_in = 3;
  int domain_size = 2;
  int rows = 3;  // decision rows per generated equation
};

struct GeneratedModel {
  CausalModel model;
  Assignment context;
};

// Deterministic per params; the produced model always passes validation
// (equations draw only on earlier variables).
GeneratedModel random_model(const GeneratorParams& params);

}  // namespace causal::corpus
