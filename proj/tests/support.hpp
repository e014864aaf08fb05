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

#include <algorithm>
#include <vector>

#include "fracver/corpus.hpp"
#include "fracver/types.hpp"

namespace testsupport {

using fracver::Interval;
using fracver::PolyCoeffs;
using fracver::corpus::TestFunction;

// c * f, test-side wrapper (linearity / scaling-covariance properties).
inline TestFunction scale(const TestFunction& f, double c) {
  TestFunction g = f;
  g.name = "scaled(" + f.name + ")";
  g.eval = [f, c](double t) { return c * f.eval(t); };
  g.deriv_left = [f, c](double t) { return c * f.deriv_left(t); };
  g.deriv_right = [f, c](double t) { return c * f.deriv_right(t); };
  g.convex = f.convex && c >= 0.0;
  if (f.poly_form) {
    PolyCoeffs p = *f.poly_form;
    for (double& v : p.coeffs) v *= c;
    g.poly_form = p;
  }
  if (f.deriv_bound_M) g.deriv_bound_M = std::abs(c) * *f.deriv_bound_M;
  return g;
}

// c1*f1 + c2*f2 on a shared domain.
inline TestFunction combine(double c1, const TestFunction& f1, double c2,
                            const TestFunction& f2) {
  TestFunction g = f1;
  g.name = "combo(" + f1.name + "," + f2.name + ")";
  g.eval = [=](double t) { return c1 * f1.eval(t) + c2 * f2.eval(t); };
  g.deriv_left = [=](double t) { return c1 * f1.deriv_left(t) + c2 * f2.deriv_left(t); };
  g.deriv_right = [=](double t) {
    return c1 * f1.deriv_right(t) + c2 * f2.deriv_right(t);
  };
  std::vector<double> bps = f1.breakpoints;
  bps.insert(bps.end(), f2.breakpoints.begin(), f2.breakpoints.end());
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  g.breakpoints = bps;
  g.convex = f1.convex && f2.convex && c1 >= 0.0 && c2 >= 0.0;
  g.poly_form.reset();
  if (f1.poly_form && f2.poly_form) {
    PolyCoeffs p;
    p.coeffs.assign(std::max(f1.poly_form->coeffs.size(), f2.poly_form->coeffs.size()), 0.0);
    for (std::size_t k = 0; k < f1.poly_form->coeffs.size(); ++k) {
      p.coeffs[k] += c1 * f1.poly_form->coeffs[k];
    }
    for (std::size_t k = 0; k < f2.poly_form->coeffs.size(); ++k) {
      p.coeffs[k] += c2 * f2.poly_form->coeffs[k];
    }
    g.poly_form = p;
  }
  g.deriv_bound_M.reset();
  return g;
}

// A polynomial TestFunction built from anchored coefficients.
inline TestFunction poly_function(const PolyCoeffs& p, const Interval& iv,
                                  bool convex = false) {
  auto eval = [p, iv](double t) {
    const double u = t - iv.a;
    double acc = 0.0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * u + *it;
    return acc;
  };
  auto deriv = [p, iv](double t) {
    const double u = t - iv.a;
    double acc = 0.0;
    for (std::size_t k = p.coeffs.size(); k-- > 1;) {
      acc = acc * u + static_cast<double>(k) * p.coeffs[k];
    }
    return acc;
  };
  return TestFunction{.name = "poly",
                      .domain = iv,
                      .eval = eval,
                      .deriv_left = deriv,
                      .deriv_right = deriv,
                      .breakpoints = {},
                      .convex = convex,
                      .poly_form = p,
                      .deriv_bound_M = std::nullopt};
}

}  // namespace testsupport
