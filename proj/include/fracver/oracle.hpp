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

#include "fracver/corpus.hpp"
#include "fracver/types.hpp"

namespace fracver::oracle {

/// Evaluate a PolyCoeffs polynomial at t (basis anchored at interval.a).
double eval(const PolyCoeffs& p, const Interval& interval, double t);

/// d/dt of the polynomial, same basis.
PolyCoeffs derivative(const PolyCoeffs& p);

/// (t - c) * p(t) in the anchored basis.
PolyCoeffs times_linear(const PolyCoeffs& p, const Interval& interval, double c);

/// Exact J_a^alpha p(x) = sum c_k Gamma(k+1)/Gamma(k+alpha+1) (x-a)^(k+alpha),
/// each term through log-Gamma. Requires alpha > 0 and degree <= 12.
double poly_rl_exact(const PolyCoeffs& p, const Interval& interval, FracOrder order,
                     double x);

/// Exact integral_lo^hi (b - t)^exponent p(t) dt for exponent > -1 (finite as
/// long as hi = b only when exponent > -1), via binomial re-expansion of p in
/// powers of (b - t). This is the primitive the identity/bound exact paths use.
double weighted_power_exact(const PolyCoeffs& p, const Interval& interval,
                            double exponent, double lo, double hi);

/// Exact integral_lo^hi (b - t)^(alpha-1) p(t) dt for alpha >= 1.
double poly_weighted_exact(const PolyCoeffs& p, const Interval& interval,
                           FracOrder order, double lo, double hi);

/// |rl_integral(f, ...) - poly_rl_exact(f.poly_form, ...)|; the dual-path
/// disagreement for a polynomial corpus member. Requires f.poly_form.
double cross_validate(const corpus::TestFunction& f, const Interval& interval,
                      FracOrder order, double x, const QuadratureConfig& cfg);

}  // namespace fracver::oracle
