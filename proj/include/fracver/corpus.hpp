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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fracver/types.hpp"

namespace fracver::corpus {

/// How a function's derivative bound was obtained.
enum class BoundProvenance { analytic, grid_scan };

/// A test function on a fixed interval, with exact one-sided derivatives and
/// declared interior kinks. One-sided derivatives are supplied analytically,
/// never by numeric differencing: the bound formulas evaluate them exactly at
/// the kinks, where a difference quotient would be wrong.
struct TestFunction {
  std::string name;
  Interval domain;
  std::function<double(double)> eval;
  std::function<double(double)> deriv_left;
  std::function<double(double)> deriv_right;
  std::vector<double> breakpoints;  // strictly inside (a,b), strictly sorted
  bool convex = false;
  std::optional<PolyCoeffs> poly_form;  // present exactly when f is polynomial
  std::optional<double> deriv_bound_M;  // sup |f'| on [a,b]
  BoundProvenance bound_provenance = BoundProvenance::analytic;

  /// Two-sided derivative at a point away from the kinks.
  double deriv(double t) const { return deriv_right(t); }
};

/// Documented catalog names (parameterized entries shown with their default).
/// Accepted spellings: "constant", "constant(v)", "linear", "square",
/// "abs_shift" (kink at the midpoint), "abs_shift(c)" with a < c < b, "exp",
/// "piecewise_linear_convex", "quartic", "neg_entropy".
std::vector<std::string> catalog_names();

/// The canonical eight-function sweep set, in catalog spelling.
std::vector<std::string> default_function_set();

/// Builds a catalog function on the given interval.
/// Throws std::invalid_argument for unknown names or bad parameters.
TestFunction builtin(const std::string& name, const Interval& interval);

/// Convexity predicate: midpoint inequality over all sampled pairs plus
/// monotonicity of the one-sided derivatives on the grid. Requires
/// samples >= 100.
bool validate_convexity(const TestFunction& f, int samples);

/// Fallback sup-|f'| estimate: max over a 10^4-point grid, inflated by 5%.
/// Builtins carry analytic bounds; this exists for hand-made functions.
double estimate_deriv_bound(const TestFunction& f);

/// Sanity checks on a hand-made TestFunction (breakpoints sorted and interior,
/// one-sided derivatives agreeing off the kinks). Throws on violation.
void check_wellformed(const TestFunction& f, int samples = 256);

}  // namespace fracver::corpus
