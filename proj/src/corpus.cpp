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

#include "fracver/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracver::corpus {

namespace {

constexpr double kConvexitySlack = 1e-12;

// Splits "name(arg)" into name and optional numeric argument.
struct ParsedName {
  std::string base;
  std::optional<double> arg;
};

ParsedName parse_name(const std::string& name) {
  const auto open = name.find('(');
  if (open == std::string::npos) return {name, std::nullopt};
  if (name.back() != ')') {
    throw std::invalid_argument("corpus: malformed catalog name '" + name + "'");
  }
  const std::string base = name.substr(0, open);
  const std::string inner = name.substr(open + 1, name.size() - open - 2);
  try {
    std::size_t pos = 0;
    const double v = std::stod(inner, &pos);
    if (pos != inner.size()) throw std::invalid_argument("trailing characters");
    return {base, v};
  } catch (const std::exception&) {
    throw std::invalid_argument("corpus: bad parameter in catalog name '" + name + "'");
  }
}

TestFunction make_constant(double v, const Interval& iv) {
  TestFunction f{.name = "constant(" + std::to_string(v) + ")",
                 .domain = iv,
                 .eval = [v](double) { return v; },
                 .deriv_left = [](double) { return 0.0; },
                 .deriv_right = [](double) { return 0.0; },
                 .breakpoints = {},
                 .convex = true,
                 .poly_form = PolyCoeffs{{v}},
                 .deriv_bound_M = 0.0};
  if (v == 1.0) f.name = "constant";
  return f;
}

TestFunction make_linear(const Interval& iv) {
  // f(t) = t, written as a + (t - a) in the anchored basis.
  return TestFunction{.name = "linear",
                      .domain = iv,
                      .eval = [](double t) { return t; },
                      .deriv_left = [](double) { return 1.0; },
                      .deriv_right = [](double) { return 1.0; },
                      .breakpoints = {},
                      .convex = true,
                      .poly_form = PolyCoeffs{{iv.a, 1.0}},
                      .deriv_bound_M = 1.0};
}

TestFunction make_square(const Interval& iv) {
  // t^2 = a^2 + 2a(t-a) + (t-a)^2
  const double a = iv.a;
  return TestFunction{.name = "square",
                      .domain = iv,
                      .eval = [](double t) { return t * t; },
                      .deriv_left = [](double t) { return 2.0 * t; },
                      .deriv_right = [](double t) { return 2.0 * t; },
                      .breakpoints = {},
                      .convex = true,
                      .poly_form = PolyCoeffs{{a * a, 2.0 * a, 1.0}},
                      .deriv_bound_M =
                          std::max(std::abs(2.0 * iv.a), std::abs(2.0 * iv.b))};
}

TestFunction make_quartic(const Interval& iv) {
  // t^4 expanded around a via the binomial theorem.
  const double a = iv.a;
  return TestFunction{
      .name = "quartic",
      .domain = iv,
      .eval = [](double t) { return t * t * t * t; },
      .deriv_left = [](double t) { return 4.0 * t * t * t; },
      .deriv_right = [](double t) { return 4.0 * t * t * t; },
      .breakpoints = {},
      .convex = true,
      .poly_form = PolyCoeffs{{a * a * a * a, 4.0 * a * a * a, 6.0 * a * a, 4.0 * a, 1.0}},
      .deriv_bound_M = std::max(std::abs(4.0 * iv.a * iv.a * iv.a),
                                std::abs(4.0 * iv.b * iv.b * iv.b))};
}

TestFunction make_abs_shift(double c, const Interval& iv) {
  if (!(c > iv.a && c < iv.b)) {
    throw std::invalid_argument("corpus: abs_shift kink must lie strictly inside the interval");
  }
  return TestFunction{
      .name = "abs_shift(" + std::to_string(c) + ")",
      .domain = iv,
      .eval = [c](double t) { return std::abs(t - c); },
      .deriv_left = [c](double t) { return t <= c ? -1.0 : 1.0; },
      .deriv_right = [c](double t) { return t < c ? -1.0 : 1.0; },
      .breakpoints = {c},
      .convex = true,
      .poly_form = std::nullopt,
      .deriv_bound_M = 1.0};
}

TestFunction make_exp(const Interval& iv) {
  return TestFunction{.name = "exp",
                      .domain = iv,
                      .eval = [](double t) { return std::exp(t); },
                      .deriv_left = [](double t) { return std::exp(t); },
                      .deriv_right = [](double t) { return std::exp(t); },
                      .breakpoints = {},
                      .convex = true,
                      .poly_form = std::nullopt,
                      .deriv_bound_M = std::exp(iv.b)};
}

TestFunction make_piecewise_linear_convex(const Interval& iv) {
  // Three affine pieces with slopes -1, 1/2, 2; kinks at 30% and 70% of the
  // interval. Nondecreasing slopes keep it convex.
  const double a = iv.a;
  const double h = iv.width();
  const double k1 = a + 0.3 * h;
  const double k2 = a + 0.7 * h;
  const double v1 = 1.0 - 0.3 * h;        // f(k1), starting from f(a) = 1
  const double v2 = v1 + 0.5 * 0.4 * h;   // f(k2)
  auto value = [=](double t) {
    if (t < k1) return 1.0 - (t - a);
    if (t < k2) return v1 + 0.5 * (t - k1);
    return v2 + 2.0 * (t - k2);
  };
  auto slope_left = [=](double t) {
    if (t <= k1) return -1.0;
    if (t <= k2) return 0.5;
    return 2.0;
  };
  auto slope_right = [=](double t) {
    if (t < k1) return -1.0;
    if (t < k2) return 0.5;
    return 2.0;
  };
  return TestFunction{.name = "piecewise_linear_convex",
                      .domain = iv,
                      .eval = value,
                      .deriv_left = slope_left,
                      .deriv_right = slope_right,
                      .breakpoints = {k1, k2},
                      .convex = true,
                      .poly_form = std::nullopt,
                      .deriv_bound_M = 2.0};
}

TestFunction make_neg_entropy(const Interval& iv) {
  // (t+s) log(t+s) with the shift s chosen so the argument starts at 1/2;
  // smooth and strictly convex, f' = log(t+s) + 1.
  const double s = 0.5 - iv.a;
  const double lo = std::abs(std::log(iv.a + s) + 1.0);
  const double hi = std::abs(std::log(iv.b + s) + 1.0);
  return TestFunction{
      .name = "neg_entropy",
      .domain = iv,
      .eval = [s](double t) { return (t + s) * std::log(t + s); },
      .deriv_left = [s](double t) { return std::log(t + s) + 1.0; },
      .deriv_right = [s](double t) { return std::log(t + s) + 1.0; },
      .breakpoints = {},
      .convex = true,
      .poly_form = std::nullopt,
      .deriv_bound_M = std::max(lo, hi)};
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"constant", "linear", "square", "abs_shift", "exp",
          "piecewise_linear_convex", "quartic", "neg_entropy"};
}

std::vector<std::string> default_function_set() {
  return {"constant", "linear", "square", "abs_shift", "exp",
          "piecewise_linear_convex", "quartic", "neg_entropy"};
}

TestFunction builtin(const std::string& name, const Interval& interval) {
  const ParsedName p = parse_name(name);
  if (p.base == "constant") return make_constant(p.arg.value_or(1.0), interval);
  if (p.base == "linear") return make_linear(interval);
  if (p.base == "square") return make_square(interval);
  if (p.base == "quartic") return make_quartic(interval);
  if (p.base == "abs_shift") {
    return make_abs_shift(p.arg.value_or(interval.midpoint()), interval);
  }
  if (p.base == "exp") return make_exp(interval);
  if (p.base == "piecewise_linear_convex") return make_piecewise_linear_convex(interval);
  if (p.base == "neg_entropy") return make_neg_entropy(interval);
  throw std::invalid_argument("corpus: unknown catalog name '" + name + "'");
}

bool validate_convexity(const TestFunction& f, int samples) {
  if (samples < 100) {
    throw std::invalid_argument("validate_convexity: samples must be >= 100");
  }
  const double a = f.domain.a;
  const double h = f.domain.width() / (samples - 1);
  std::vector<double> grid(samples), values(samples);
  for (int i = 0; i < samples; ++i) {
    grid[i] = a + i * h;
    values[i] = f.eval(grid[i]);
  }
  // Midpoint convexity over all sampled pairs.
  for (int i = 0; i < samples; ++i) {
    for (int j = i + 1; j < samples; ++j) {
      const double mid = 0.5 * (grid[i] + grid[j]);
      if (f.eval(mid) > 0.5 * (values[i] + values[j]) + kConvexitySlack) {
        return false;
      }
    }
  }
  // One-sided derivative monotonicity on the grid.
  double prev = f.deriv_right(grid[0]);
  for (int i = 0; i < samples; ++i) {
    const double dl = f.deriv_left(grid[i]);
    const double dr = f.deriv_right(grid[i]);
    if (dl > dr + kConvexitySlack) return false;
    if (dr + kConvexitySlack < prev) return false;
    prev = dr;
  }
  return true;
}

double estimate_deriv_bound(const TestFunction& f) {
  constexpr int kGrid = 10000;
  const double a = f.domain.a;
  const double h = f.domain.width() / (kGrid - 1);
  double m = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    const double t = a + i * h;
    m = std::max({m, std::abs(f.deriv_left(t)), std::abs(f.deriv_right(t))});
  }
  return 1.05 * m;
}

void check_wellformed(const TestFunction& f, int samples) {
  if (!f.eval || !f.deriv_left || !f.deriv_right) {
    throw std::invalid_argument("TestFunction: eval and both one-sided derivatives are required");
  }
  double prev = f.domain.a;
  for (double bp : f.breakpoints) {
    if (!(bp > f.domain.a && bp < f.domain.b)) {
      throw std::invalid_argument("TestFunction: breakpoint outside the open interval");
    }
    if (!(bp > prev)) {
      throw std::invalid_argument("TestFunction: breakpoints must be strictly sorted");
    }
    prev = bp;
  }
  // Off the declared kinks the two one-sided derivatives must agree.
  const double h = f.domain.width() / (samples + 1);
  for (int i = 1; i <= samples; ++i) {
    const double t = f.domain.a + i * h;
    const bool near_kink =
        std::any_of(f.breakpoints.begin(), f.breakpoints.end(),
                    [&](double bp) { return std::abs(t - bp) < 2.0 * h; });
    if (near_kink) continue;
    if (std::abs(f.deriv_left(t) - f.deriv_right(t)) > 1e-10) {
      throw std::invalid_argument("TestFunction: one-sided derivatives disagree off the kinks");
    }
  }
}

}  // namespace fracver::corpus
