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

namespace fracver::identities {

/// Which instrument produced a set of terms.
enum class Provenance { quadrature, exact_oracle };

/// Route selection. `automatic` takes the exact polynomial route whenever the
/// function carries a poly_form, else quadrature.
enum class PathPolicy { automatic, force_quadrature, force_exact };

const char* to_string(Provenance p);

/// The individual terms of the fractional Montgomery identity, for diagnosis.
/// All integral terms in one breakdown share the recorded provenance.
///
///   lhs = mean_term - boundary_term - kernel_correction + derivative_term
///
/// with lhs = (1-2*lambda) f(x) (plain f(x) when lambda = 0, where the
/// boundary term vanishes and the kernel is the one-parameter P2).
struct TermBreakdown {
  double lhs = 0.0;
  double mean_term = 0.0;          // Gamma(a)/(b-a) (b-x)^(1-a) J_a^a f(b)
  double boundary_term = 0.0;      // lambda ((b-a)/(b-x))^(a-1) f(a)
  double kernel_correction = 0.0;  // J_a^(a-1) of (kernel * f) at b
  double derivative_term = 0.0;    // J_a^a of (kernel * f') at b
  Provenance provenance = Provenance::quadrature;

  /// Signed identity violation; zero when the identity holds.
  double residual() const {
    return lhs - mean_term + boundary_term + kernel_correction - derivative_term;
  }
};

/// Terms of the one-parameter identity (kernel P2), alpha >= 1, a < x < b.
/// At alpha = 1 the kernel correction follows the J^0 convention and is
/// identically zero, reducing the assembly to the classical identity.
TermBreakdown montgomery_terms(const corpus::TestFunction& f, const Interval& interval,
                               FracOrder order, double x, const QuadratureConfig& cfg,
                               PathPolicy policy = PathPolicy::automatic);

double montgomery_residual(const corpus::TestFunction& f, const Interval& interval,
                           FracOrder order, double x, const QuadratureConfig& cfg,
                           PathPolicy policy = PathPolicy::automatic);

/// The bracketed representation of f(x) - mean_term + kernel_correction:
///   (b-x)^(1-a)/(b-a) [ integral_a^x (b-t)^(a-1)(t-a) f' dt
///                       - integral_x^b (b-t)^a f' dt ].
double rhs_representation(const corpus::TestFunction& f, const Interval& interval,
                          FracOrder order, double x, const QuadratureConfig& cfg,
                          PathPolicy policy = PathPolicy::automatic);

/// Terms of the two-parameter identity (kernel P3), 0 <= lambda <= 1. At
/// alpha = 1 the J^0 convention gives kernel_correction = P3(x,b) f(b),
/// which is lambda*f(b) and generally nonzero.
TermBreakdown generalized_terms(const corpus::TestFunction& f, const Interval& interval,
                                FracOrder order, double x, double lambda,
                                const QuadratureConfig& cfg,
                                PathPolicy policy = PathPolicy::automatic);

double generalized_residual(const corpus::TestFunction& f, const Interval& interval,
                            FracOrder order, double x, double lambda,
                            const QuadratureConfig& cfg,
                            PathPolicy policy = PathPolicy::automatic);

/// The classical route, computed entirely with the independent adaptive
/// integrator: f(x) = mean + integral of P1(x,.) f'. Used to confirm the
/// alpha = 1 reduction of the fractional assembly.
struct ClassicalTerms {
  double mean = 0.0;         // (1/(b-a)) integral_a^b f
  double kernel_term = 0.0;  // integral_a^b P1(x,t) f'(t) dt
  double residual(double fx) const { return fx - mean - kernel_term; }
};

ClassicalTerms classical_montgomery(const corpus::TestFunction& f,
                                    const Interval& interval, double x,
                                    double tol = 1e-13);

}  // namespace fracver::identities
