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
#include <vector>

#include "fracver/corpus.hpp"
#include "fracver/types.hpp"

namespace fracver::quad {

using Fn = std::function<double(double)>;

/// Gauss--Jacobi rule mapped to [0,1]:
///   integral_0^1 s^exponent g(s) ds  ~=  sum_i weights[i] * g(nodes[i]).
/// Exact for polynomial g up to degree 2n-1, for any exponent > -1.
struct JacobiRule {
  double exponent;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule lookup; nodes are found by Newton iteration on the Jacobi
/// recurrence and memoized per (exponent, n). Thread-safe.
const JacobiRule& jacobi_rule(double exponent, int n);

/// integral_lo^hi (b - t)^exponent g(t) dt with lo <= hi <= b_anchor.
/// When hi reaches b_anchor the weight is absorbed by a Gauss--Jacobi rule
/// (exponent > -1 required); otherwise the weight is smooth on the segment
/// and folded into an adaptive Gauss--Legendre evaluation.
double weighted_segment(const Fn& g, double lo, double hi, double b_anchor,
                        double exponent, const QuadratureConfig& cfg);

/// Riemann--Liouville integral J_a^alpha f(x) =
///   (1/Gamma(alpha)) integral_a^x (x - t)^(alpha-1) f(t) dt,  alpha > 0,
/// with J^0 f(x) = f(x). The integrand is split at f's declared breakpoints;
/// the piece adjacent to x absorbs the weight singularity into the rule.
double rl_integral(const corpus::TestFunction& f, const Interval& interval,
                   FracOrder order, double x, const QuadratureConfig& cfg);

/// integral_a^b (b - t)^(alpha-1) g(t) dt for alpha >= 1, split at the given
/// interior breakpoints. No 1/Gamma(alpha) factor.
double weighted_integral(const Fn& g, const Interval& interval, FracOrder order,
                         const std::vector<double>& extra_breakpoints,
                         const QuadratureConfig& cfg);

/// Independent cross-check integrator (adaptive Simpson with Richardson
/// extrapolation); shares nothing with the Gauss--Jacobi path. Throws
/// ConvergenceError carrying the best estimate when the subdivision budget
/// runs out.
double adaptive_oracle(const Fn& g, double a, double b, double tol);

/// Sorted, deduplicated segment edges: {lo, hi} plus any of the candidate
/// points strictly inside (lo, hi). Shared by the identity assembly.
std::vector<double> segment_edges(double lo, double hi,
                                  const std::vector<double>& candidates);

}  // namespace fracver::quad
