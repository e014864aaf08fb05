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

#include <string>
#include <utility>

#include "fracver/identities.hpp"

namespace fracver::bounds {

/// Numerical slack for each instrument; the identity-residual floor dominates
/// the quadrature-backed checks.
struct Slack {
  double quadrature = 1e-8;
  double exact = 1e-11;

  double pick(identities::Provenance p) const {
    return p == identities::Provenance::exact_oracle ? exact : quadrature;
  }
};

/// Outcome of one inequality check: lhs <= rhs up to slack.
struct BoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  double slack = 0.0;
  bool holds = false;   // margin >= -slack
  std::string variant;  // thm1|thm2|thm3_exact|thm3_printed|cor1|cor2|midpoint1|midpoint2
  identities::Provenance provenance = identities::Provenance::quadrature;
};

/// Lower bound on (mean - kernel_correction - f(x)) for convex f in terms of
/// the one-sided derivatives at x.
BoundReport thm1_check(const corpus::TestFunction& f, const Interval& interval,
                       FracOrder order, double x, const QuadratureConfig& cfg,
                       const Slack& slack = {},
                       identities::PathPolicy policy = identities::PathPolicy::automatic);

/// Upper bound on the same quantity in terms of f'_+(a) and f'_-(b).
BoundReport thm2_check(const corpus::TestFunction& f, const Interval& interval,
                       FracOrder order, double x, const QuadratureConfig& cfg,
                       const Slack& slack = {},
                       identities::PathPolicy policy = identities::PathPolicy::automatic);

/// The alpha = 1 corollaries, assembled from elementary integrals through the
/// independent adaptive integrator (no fractional machinery).
BoundReport cor1_check(const corpus::TestFunction& f, const Interval& interval,
                       double x, const Slack& slack = {});
BoundReport cor2_check(const corpus::TestFunction& f, const Interval& interval,
                       double x, const Slack& slack = {});

/// Midpoint chains at x = (a+b)/2:
///   first:  0 <= (b-a)/8 [f'_+(m) - f'_-(m)] <= mean - f(m)
///   second: mean - f(m) <= (b-a)/8 [f'_-(b) - f'_+(a)]
/// The first report folds both links into its margin (the smaller of the two
/// gaps), keeping holds <=> margin >= -slack.
std::pair<BoundReport, BoundReport> midpoint_chain(const corpus::TestFunction& f,
                                                   const Interval& interval,
                                                   const Slack& slack = {});

/// Bounded-derivative theorem. Returns (exact, printed):
///  - exact: rhs = M (b-x)^(1-alpha)/(b-a) (J3 + J4) from the exact moments;
///  - printed: rhs evaluated verbatim from the source's closed-form brace,
///    reported for comparison only (see kernels::j3_printed).
/// Both share lhs = |(1-2l)f(x) - mean + boundary + kernel_correction|.
std::pair<BoundReport, BoundReport> thm3_check(
    const corpus::TestFunction& f, const Interval& interval, FracOrder order, double x,
    double lambda, const QuadratureConfig& cfg, const Slack& slack = {},
    identities::PathPolicy policy = identities::PathPolicy::automatic);

/// The printed right-hand side of the bounded-derivative theorem, verbatim.
double thm3_rhs_printed(const Interval& interval, FracOrder order, double x,
                        double lambda, double deriv_bound);

}  // namespace fracver::bounds
