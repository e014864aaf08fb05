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

#include "fracver/types.hpp"

namespace fracver::kernels {

/// Classical Peano kernel: (t-a)/(b-a) for t < x, (t-b)/(b-a) for t >= x.
/// The tie t = x takes the upper branch.
double p1(double x, double t, const Interval& interval);

/// Fractional Peano kernel P2(x,t) = P1(x,t) (b-x)^(1-alpha) Gamma(alpha),
/// alpha >= 1. Throws for x = b with alpha > 1 (the prefactor is singular).
double p2(double x, double t, const Interval& interval, FracOrder order);

/// Two-parameter kernel behind the extended identity:
///   t < x : (t - (1-l)a - l b)/(b-a) * (b-x)^(1-alpha) Gamma(alpha)
///   t >= x: (t - (1-l)b - l a)/(b-a) * (b-x)^(1-alpha) Gamma(alpha)
/// for 0 <= lambda <= 1; reduces to p2 at lambda = 0.
double p3(double x, double t, const Interval& interval, FracOrder order,
          double lambda);

/// integral_a^x (b-t)^(alpha-1) (t-a) dt in closed form:
///   [ (b-a)^(alpha+1) + (b-x)^alpha (alpha(b-x) - (alpha+1)(b-a)) ] / (alpha(alpha+1))
double moment_left(double x, const Interval& interval, FracOrder order);

/// integral_x^b (b-t)^alpha dt = (b-x)^(alpha+1)/(alpha+1).
double moment_right(double x, const Interval& interval, FracOrder order);

/// J3 = integral_a^x (b-t)^(alpha-1) |t - (1-l)a - l b| dt, from exact
/// piecewise antiderivatives (Beta-type power primitives), splitting at the
/// kink c1 = (1-l)a + l b when it falls inside (a, x). Reduces to
/// moment_left at lambda = 0.
double j3_moment(double x, const Interval& interval, FracOrder order, double lambda);

/// J4 = integral_x^b (b-t)^(alpha-1) |t - (1-l)b - l a| dt, splitting at
/// c2 = l a + (1-l)b when x < c2 < b. Reduces to moment_right at lambda = 0.
double j4_moment(double x, const Interval& interval, FracOrder order, double lambda);

/// The J3 closed form as printed in the source material, evaluated verbatim.
/// Its bracket mixes a dimensionless term with lambda*(b-a); it disagrees
/// with the exact moment for lambda > 0 and exists only for the comparison
/// ledger. Never used by the bound checks' exact route.
double j3_printed(double x, const Interval& interval, FracOrder order, double lambda);

/// Verbatim printed J4 closed form (this one matches the exact moment when
/// x < c2, the case its derivation assumed).
double j4_printed(double x, const Interval& interval, FracOrder order, double lambda);

}  // namespace fracver::kernels
