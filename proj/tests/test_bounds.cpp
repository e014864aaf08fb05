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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fracver/bounds.hpp"
#include "fracver/kernels.hpp"
#include "support.hpp"

using namespace fracver;

namespace {
const Interval kUnit{0.0, 1.0};
const QuadratureConfig kCfg{};
const std::vector<double> kAlphas{1.0, 1.25, 1.5, 2.0, 2.5, 3.0};
const std::vector<double> kXs{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
}  // namespace

TEST_CASE("thm1 on the square at alpha = 1: lhs 0, rhs 1/12") {
  const auto sq = corpus::builtin("square", kUnit);
  const auto r = bounds::thm1_check(sq, kUnit, FracOrder{1.0}, 0.5, kCfg);
  CHECK(std::abs(r.lhs) < 1e-14);
  CHECK(r.rhs == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
  CHECK(r.holds);
  CHECK(r.variant == "thm1");
}

TEST_CASE("thm1 tight case: the centered kink function") {
  const auto f = corpus::builtin("abs_shift(0.5)", kUnit);
  const auto r = bounds::thm1_check(f, kUnit, FracOrder{1.0}, 0.5, kCfg);
  CHECK(r.lhs == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(r.rhs == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(std::abs(r.margin) < 1e-10);
  CHECK(r.holds);
}

TEST_CASE("thm2 on the square at alpha = 1: lhs 1/12, rhs 1/4") {
  const auto sq = corpus::builtin("square", kUnit);
  const auto r = bounds::thm2_check(sq, kUnit, FracOrder{1.0}, 0.5, kCfg);
  CHECK(r.lhs == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(r.holds);
}

TEST_CASE("linear functions are tight in both theorems") {
  const auto lin = corpus::builtin("linear", kUnit);
  for (double alpha : kAlphas) {
    for (double x : kXs) {
      const auto r1 = bounds::thm1_check(lin, kUnit, FracOrder{alpha}, x, kCfg);
      const auto r2 = bounds::thm2_check(lin, kUnit, FracOrder{alpha}, x, kCfg);
      CAPTURE(alpha);
      CAPTURE(x);
      CHECK(std::abs(r1.margin) <= 1e-9);
      CHECK(std::abs(r2.margin) <= 1e-9);
    }
  }
}

TEST_CASE("both bounds hold over the sweep for every convex member") {
  for (const auto& name : corpus::default_function_set()) {
    const auto f = corpus::builtin(name, kUnit);
    for (double alpha : {1.0, 1.5, 2.5}) {
      for (double x : {0.1, 0.5, 0.9}) {
        CAPTURE(name);
        CAPTURE(alpha);
        CAPTURE(x);
        const auto r1 = bounds::thm1_check(f, kUnit, FracOrder{alpha}, x, kCfg);
        const auto r2 = bounds::thm2_check(f, kUnit, FracOrder{alpha}, x, kCfg);
        CHECK(r1.holds);
        CHECK(r2.holds);
        // Chain: the lower bound never exceeds the upper bound.
        CHECK(r1.lhs <= r2.rhs + 2e-8);
        // Both bracket the same middle quantity.
        CHECK(std::abs(r1.rhs - r2.lhs) < 1e-12);
      }
    }
  }
}

TEST_CASE("thm1 lhs agrees with the raw-moment assembly") {
  // The lower bound is (b-x)^(1-alpha)/(b-a) (f'_+(x) MR - f'_-(x) ML),
  // which is the inequality chain's origin before the closed-form collapse.
  for (const char* name : {"square", "exp", "abs_shift"}) {
    const auto f = corpus::builtin(name, kUnit);
    for (double alpha : kAlphas) {
      for (double x : {0.25, 0.5, 0.75}) {
        const FracOrder order{alpha};
        const double frac = alpha == 1.0 ? 1.0 : std::pow(1.0 - x, 1.0 - alpha);
        const double from_moments =
            frac * (f.deriv_right(x) * kernels::moment_right(x, kUnit, order) -
                    f.deriv_left(x) * kernels::moment_left(x, kUnit, order));
        const auto r = bounds::thm1_check(f, kUnit, order, x, kCfg);
        CAPTURE(name);
        CHECK(r.lhs == doctest::Approx(from_moments).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("corollaries match the theorems at alpha = 1 up to the (b-a) factor") {
  for (const char* name : {"square", "exp"}) {
    const auto f = corpus::builtin(name, kUnit);
    for (double x : {0.3, 0.6}) {
      const auto c1 = bounds::cor1_check(f, kUnit, x);
      const auto c2 = bounds::cor2_check(f, kUnit, x);
      const auto t1 = bounds::thm1_check(f, kUnit, FracOrder{1.0}, x, kCfg);
      const auto t2 = bounds::thm2_check(f, kUnit, FracOrder{1.0}, x, kCfg);
      CAPTURE(name);
      CHECK(std::abs(c1.lhs - kUnit.width() * t1.lhs) < 1e-10);
      CHECK(std::abs(c1.rhs - kUnit.width() * t1.rhs) < 1e-10);
      CHECK(std::abs(c2.rhs - kUnit.width() * t2.rhs) < 1e-10);
      CHECK(c1.holds);
      CHECK(c2.holds);
      CHECK(c1.variant == "cor1");
      CHECK(c2.variant == "cor2");
    }
  }
}

TEST_CASE("midpoint chains: square gives 0 <= 0 <= 1/12 <= 1/4") {
  const auto sq = corpus::builtin("square", kUnit);
  const auto [first, second] = bounds::midpoint_chain(sq, kUnit);
  CHECK(std::abs(first.lhs) < 1e-14);                       // kink gap of a smooth f
  CHECK(first.rhs == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
  CHECK(second.rhs == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(first.holds);
  CHECK(second.holds);
  CHECK(first.variant == "midpoint1");
  CHECK(second.variant == "midpoint2");
}

TEST_CASE("midpoint chains: centered kink is tight at 1/4") {
  const auto f = corpus::builtin("abs_shift(0.5)", kUnit);
  const auto [first, second] = bounds::midpoint_chain(f, kUnit);
  CHECK(first.lhs == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(first.rhs == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(std::abs(first.margin) < 1e-12);
  CHECK(second.rhs == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(first.holds);
  CHECK(second.holds);
}

TEST_CASE("midpoint chain collapses entirely for a linear function") {
  const auto lin = corpus::builtin("linear", kUnit);
  const auto [first, second] = bounds::midpoint_chain(lin, kUnit);
  CHECK(std::abs(first.lhs) < 1e-14);
  CHECK(std::abs(first.rhs) < 1e-12);
  CHECK(std::abs(second.rhs) < 1e-14);
}

TEST_CASE("thm3 exact bound holds; printed bound is reported for comparison") {
  const auto sq = corpus::builtin("square", kUnit);
  const auto [exact, printed] =
      bounds::thm3_check(sq, kUnit, FracOrder{1.5}, 0.5, 0.5, kCfg);
  CHECK(exact.holds);
  CHECK(exact.variant == "thm3_exact");
  CHECK(printed.variant == "thm3_printed");
  CHECK(exact.lhs == printed.lhs);
  CHECK(std::abs(printed.rhs - exact.rhs) > 1e-3);  // the documented divergence
}

TEST_CASE("thm3 holds across the sweep with the exact moments") {
  for (const auto& name : corpus::default_function_set()) {
    const auto f = corpus::builtin(name, kUnit);
    for (double alpha : {1.0, 1.5, 3.0}) {
      for (double lambda : {0.0, 0.5, 1.0}) {
        for (double x : {0.1, 0.5, 0.9}) {
          CAPTURE(name);
          CAPTURE(alpha);
          CAPTURE(lambda);
          CAPTURE(x);
          const auto [exact, printed] =
              bounds::thm3_check(f, kUnit, FracOrder{alpha}, x, lambda, kCfg);
          CHECK(exact.holds);
        }
      }
    }
  }
}

TEST_CASE("thm3 at lambda = 0 reduces to the bounded-derivative corollary") {
  const auto ex = corpus::builtin("exp", kUnit);
  const double M = *ex.deriv_bound_M;
  for (double alpha : kAlphas) {
    for (double x : {0.25, 0.5, 0.75}) {
      const FracOrder order{alpha};
      const auto [exact, printed] = bounds::thm3_check(ex, kUnit, order, x, 0.0, kCfg);
      const double frac = alpha == 1.0 ? 1.0 : std::pow(1.0 - x, 1.0 - alpha);
      const double reduction = M * frac *
                               (kernels::moment_left(x, kUnit, order) +
                                kernels::moment_right(x, kUnit, order));
      CHECK(std::abs(exact.rhs - reduction) < 1e-10);
      CHECK(std::abs(printed.rhs - exact.rhs) < 1e-10);  // printed agrees at lambda=0
    }
  }
}

TEST_CASE("thm3 linear midpoint case: lhs vanishes") {
  const auto lin = corpus::builtin("linear", kUnit);
  const auto [exact, printed] =
      bounds::thm3_check(lin, kUnit, FracOrder{1.0}, 0.5, 0.0, kCfg);
  CHECK(std::abs(exact.lhs) < 1e-12);
  CHECK(exact.holds);
  CHECK(printed.holds);
}

TEST_CASE("printed brace equals the printed moment pair") {
  for (double alpha : kAlphas) {
    for (double lambda : {0.0, 0.25, 0.5, 1.0}) {
      for (double x : {0.2, 0.6}) {
        const FracOrder order{alpha};
        const double frac = alpha == 1.0 ? 1.0 : std::pow(1.0 - x, 1.0 - alpha);
        const double via_moments =
            2.0 * frac *
            (kernels::j3_printed(x, kUnit, order, lambda) +
             kernels::j4_printed(x, kUnit, order, lambda));
        const double brace = bounds::thm3_rhs_printed(kUnit, order, x, lambda, 2.0);
        CHECK(std::abs(brace - via_moments) < 1e-12);
      }
    }
  }
}

TEST_CASE("scaling covariance: c*f scales lhs, rhs, margin by c") {
  const auto sq = corpus::builtin("square", kUnit);
  const auto scaled = testsupport::scale(sq, 3.0);
  for (double alpha : {1.0, 1.5, 2.5}) {
    for (double x : {0.3, 0.7}) {
      const auto base1 = bounds::thm1_check(sq, kUnit, FracOrder{alpha}, x, kCfg);
      const auto big1 = bounds::thm1_check(scaled, kUnit, FracOrder{alpha}, x, kCfg);
      CHECK(std::abs(big1.lhs - 3.0 * base1.lhs) < 1e-12);
      CHECK(std::abs(big1.rhs - 3.0 * base1.rhs) < 1e-12);
      CHECK(std::abs(big1.margin - 3.0 * base1.margin) < 1e-12);
      const auto base2 = bounds::thm2_check(sq, kUnit, FracOrder{alpha}, x, kCfg);
      const auto big2 = bounds::thm2_check(scaled, kUnit, FracOrder{alpha}, x, kCfg);
      CHECK(std::abs(big2.lhs - 3.0 * base2.lhs) < 1e-12);
      CHECK(std::abs(big2.rhs - 3.0 * base2.rhs) < 1e-12);
      CHECK(std::abs(big2.margin - 3.0 * base2.margin) < 1e-12);
    }
  }
}

TEST_CASE("preconditions") {
  corpus::TestFunction concave{.name = "neg_square",
                               .domain = kUnit,
                               .eval = [](double t) { return -t * t; },
                               .deriv_left = [](double t) { return -2.0 * t; },
                               .deriv_right = [](double t) { return -2.0 * t; },
                               .breakpoints = {},
                               .convex = false,
                               .poly_form = std::nullopt,
                               .deriv_bound_M = 2.0};
  CHECK_THROWS_AS(bounds::thm1_check(concave, kUnit, FracOrder{1.0}, 0.5, kCfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(bounds::midpoint_chain(concave, kUnit), std::invalid_argument);

  corpus::TestFunction no_bound = corpus::builtin("exp", kUnit);
  no_bound.deriv_bound_M.reset();
  CHECK_THROWS_AS(bounds::thm3_check(no_bound, kUnit, FracOrder{1.0}, 0.5, 0.0, kCfg),
                  std::invalid_argument);
  const auto sq = corpus::builtin("square", kUnit);
  CHECK_THROWS_AS(bounds::thm1_check(sq, kUnit, FracOrder{1.5}, 1.0, kCfg),
                  std::domain_error);
}
