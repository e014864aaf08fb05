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

#include <stdexcept>
#include <string>
#include <vector>

namespace fracver {

/// Closed interval [a, b] with a < b. Every evaluation carries one.
struct Interval {
  double a;
  double b;

  Interval(double a_, double b_) : a(a_), b(b_) {
    if (!(a < b)) {
      throw std::invalid_argument("Interval: requires a < b, got [" +
                                  std::to_string(a_) + ", " +
                                  std::to_string(b_) + "]");
    }
  }

  double width() const { return b - a; }
  double midpoint() const { return 0.5 * (a + b); }
  bool contains(double t) const { return t >= a && t <= b; }
};

/// Fractional integration order. Each operation validates its own domain
/// (alpha > 0 for integration, alpha >= 1 for the identity/bound layer).
struct FracOrder {
  double alpha;
  constexpr explicit FracOrder(double alpha_) : alpha(alpha_) {}
};

/// Knobs for the singular-weight integrator.
struct QuadratureConfig {
  int jacobi_nodes = 32;
  int max_subdivisions = 64;
  double target_abs_tol = 1e-10;
};

inline void validate(const QuadratureConfig& cfg) {
  if (cfg.jacobi_nodes < 4) {
    throw std::invalid_argument("QuadratureConfig: jacobi_nodes must be >= 4");
  }
  if (!(cfg.target_abs_tol > 0.0)) {
    throw std::invalid_argument("QuadratureConfig: target_abs_tol must be > 0");
  }
  if (cfg.max_subdivisions < 0) {
    throw std::invalid_argument("QuadratureConfig: max_subdivisions must be >= 0");
  }
}

/// Polynomial in the monomial basis of (t - a): f(t) = sum c_k (t - a)^k.
/// The basis anchor is always the interval's left endpoint.
struct PolyCoeffs {
  std::vector<double> coeffs;

  static constexpr int kMaxDegree = 12;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

}  // namespace fracver
