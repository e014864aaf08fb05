// Copyright 2026 the fracver authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fracver/types.hpp"

namespace fracver::sweep {

enum class Check {
  identity,         // one-parameter identity residuals (lambda fixed at 0)
  identity_lambda,  // two-parameter identity residuals over the lambda grid
  thm1,
  thm2,
  thm3,             // exact and printed variants, over the lambda grid
  midpoint,
  quad_selftest,    // rl vs exact oracle on the polynomial corpus + moments
};

const char* to_string(Check c);
Check check_from_string(const std::string& name);
std::vector<Check> all_checks();

struct SweepConfig {
  Interval interval{0.0, 1.0};
  std::vector<double> alphas{1.0, 1.25, 1.5, 2.0, 2.5, 3.0};
  std::vector<double> lambdas{0.0, 0.25, 0.5, 0.75, 1.0};
  int x_grid = 9;  // count of uniform interior points
  std::vector<std::string> functions;  // defaults to the canonical eight
  std::vector<Check> checks;           // defaults to all
  double slack_quad = 1e-8;
  double slack_exact = 1e-11;
  double residual_tol = 1e-8;
  std::string output_format = "csv";  // csv | json
  std::string output_path;            // empty -> stdout
  int jobs = 1;

  std::vector<double> x_points() const;
};

/// Parses the flat key=value config grammar (see README). Throws ConfigError
/// naming the offending key for malformed input, unknown keys, or
/// out-of-range values. An empty document yields the defaults.
SweepConfig parse_config(const std::string& text);

/// One verification row. Identity-style rows carry residual; inequality rows
/// carry lhs/rhs/margin. Errored rows carry the reason and fail the run.
struct Row {
  std::string check;  // identity|identity_lambda|thm1|thm2|thm3_exact|...
  std::string function;
  double alpha = 1.0;
  double lambda = 0.0;
  double x = 0.0;
  std::optional<double> lhs, rhs, margin, residual;
  bool holds = false;
  std::string provenance;  // quadrature | exact-oracle | error:<reason>
  std::optional<std::string> error;
};

/// Where the verbatim printed bound disagrees with the exact-moment bound.
struct TypoLedgerEntry {
  std::string function;
  double alpha = 1.0;
  double lambda = 0.0;
  double x = 0.0;
  double printed_rhs = 0.0;
  double exact_rhs = 0.0;
  double delta = 0.0;  // printed - exact
};

struct CheckSummary {
  int pass = 0;
  int fail = 0;
  std::optional<double> worst_margin;        // min margin over inequality rows
  std::optional<double> worst_abs_residual;  // max |residual| over identity rows
};

struct SweepReport {
  std::vector<Row> rows;  // sorted by (check, function, alpha, lambda, x)
  std::map<std::string, CheckSummary> summary;
  std::vector<TypoLedgerEntry> typo_ledger;
  bool ok = false;  // every row holds (thm3_printed informational) and no errors
};

/// Runs every (check x function x alpha x lambda x x) combination. The row
/// set, ordering, and every numeric value are independent of cfg.jobs.
SweepReport run_sweep(const SweepConfig& cfg);

/// Fixed-format CSV: header
///   check,function,alpha,lambda,x,lhs,rhs,margin,residual,holds,provenance
/// floats at 17 significant digits, '.' decimal separator, '\n' endings.
/// Byte-reproducible for a fixed config.
std::string render_csv(const SweepReport& report);

/// JSON mirror of the CSV rows plus the summary and typo_ledger objects.
std::string render_json(const SweepConfig& cfg, const SweepReport& report);

/// Short human-readable pass/fail digest, one line per check.
std::string render_summary(const SweepReport& report);

}  // namespace fracver::sweep
