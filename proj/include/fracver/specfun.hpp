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

namespace fracver::specfun {

/// Gamma function for x > 0. Lanczos rational approximation plus one
/// recurrence step below 0.5; switches to the log-domain path for large x
/// so intermediates cannot overflow. Relative error <= 1e-13 on [0.5, 30].
/// Throws std::domain_error for x <= 0.
double gamma(double x);

/// Natural log of Gamma(x), x > 0.
double log_gamma(double x);

/// Complete Beta function B(p, q) = Gamma(p)Gamma(q)/Gamma(p+q), p, q > 0.
/// Evaluated in the log domain; symmetric in (p, q) as computed.
double beta(double p, double q);

/// log B(p, q).
double log_beta(double p, double q);

}  // namespace fracver::specfun
