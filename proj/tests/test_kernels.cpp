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

#include <algorithm>
#include <cmath>

#include "fracver/kernels.hpp"
#include "fracver/quad.hpp"
#include "fracver/specfun.hpp"

using namespace fracver;

namespace {
const Interval kUnit{0.0, 1.0};
const QuadratureConfig kCfg{};

const std::vector<double> kAlphas{1.0, 1.25, 1.5, 2.0, 2.5, 3.0};
const std::vector<double> kLambdas{0.0, 0.25, 0.5, 0.75, 1.0};
const std::vector<double> kXs{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

// Quadrature route for the four moment integrands, splitting at the |.| kink.
double j3_by_quadrature(double x, const Interval& iv, FracOrder order, double lambda) {
  const double c1 = iv.a + lambda * iv.width();
  const double split = std::clamp(c1, iv.a, x);
  return quad::weighted_segment([c1](double t) { return c1 - t; }, iv.a, split, iv.b,
                                order.alpha - 1.0, kCfg) +
         quad::weighted_segment([c1](double t) { return t - c1; }, split, x, iv.b,
                                order.alpha - 1.0, kCfg);
}

double j4_by_quadrature(double x, const Interval& iv, FracOrder order, double lambda) {
  const double c2 = iv.b - lambda * iv.width();
  const double split = std::clamp(c2, x, iv.b);
  return quad::weighted_segment([c2](double t) { return c2 - t; }, x, split, iv.b,
                                order.alpha - 1.0, kCfg) +
         quad::weighted_segment([c2](double t) { return t - c2; }, split, iv.b, iv.b,
                                order.alpha - 1.0, kCfg);
}
}  // namespace

TEST_CASE("p1 branches and the tie rule") {
  CHECK(kernels::p1(0.5, 0.25, kUnit) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(kernels::p1(0.5, 1.0, kUnit) == doctest::Approx(0.0).epsilon(1e-15));
  // t = x takes the upper branch: (t-b)/(b-a) = -0.5
  CHECK(kernels::p1(0.5, 0.5, kUnit) == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("p2 reduces to p1 at alpha = 1 and matches direct substitution") {
  for (double x : kXs) {
    for (double t : kXs) {
      CHECK(kernels::p2(x, t, kUnit, FracOrder{1.0}) == kernels::p1(x, t, kUnit));
    }
  }
  CHECK(kernels::p2(0.5, 1.0, kUnit, FracOrder{2.5}) == doctest::Approx(0.0));
  // x=0.5, t=0.25, alpha=2: 0.25 * (0.5)^(-1) * Gamma(2) = 0.5
  CHECK(kernels::p2(0.5, 0.25, kUnit, FracOrder{2.0}) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(kernels::p2(1.0, 0.5, kUnit, FracOrder{2.0}), std::domain_error);
  CHECK_THROWS_AS(kernels::p2(0.5, 0.5, kUnit, FracOrder{0.5}), std::domain_error);
}

TEST_CASE("p3 reduces to p2 at lambda = 0 on a 50x50 grid") {
  for (double alpha : {1.0, 1.5, 2.0}) {
    for (int i = 0; i < 50; ++i) {
      const double x = (i + 0.5) / 50.0;
      for (int j = 0; j < 50; ++j) {
        const double t = (j + 0.5) / 50.0;
        const double diff = kernels::p3(x, t, kUnit, FracOrder{alpha}, 0.0) -
                            kernels::p2(x, t, kUnit, FracOrder{alpha});
        CHECK(std::abs(diff) <= 1e-14);
      }
    }
  }
}

TEST_CASE("p3 is continuous at t = x when lambda = 1/2") {
  for (double alpha : {1.0, 1.5, 2.0}) {
    for (double x : kXs) {
      const double eps = 1e-9;
      const double below = kernels::p3(x, x - eps, kUnit, FracOrder{alpha}, 0.5);
      const double at = kernels::p3(x, x, kUnit, FracOrder{alpha}, 0.5);
      CHECK(std::abs(below - at) < 1e-7);
    }
  }
}

TEST_CASE("p3 upper branch arithmetic at lambda = 1") {
  CHECK(kernels::p3(0.5, 1.0, kUnit, FracOrder{1.0}, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(kernels::p3(0.5, 0.5, kUnit, FracOrder{1.5}, 1.5), std::domain_error);
}

TEST_CASE("kernel sign pattern") {
  for (double alpha : kAlphas) {
    for (double x : kXs) {
      for (double t : kXs) {
        const double v = kernels::p2(x, t, kUnit, FracOrder{alpha});
        if (t < x) {
          CHECK(v >= 0.0);
        } else {
          CHECK(v <= 0.0);
        }
      }
    }
  }
}

TEST_CASE("moment_left closed form") {
  // x = a: empty integral, the closed form must cancel.
  CHECK(std::abs(kernels::moment_left(0.0, kUnit, FracOrder{1.5})) < 1e-15);
  // x = b: full-range Beta moment B(2, alpha).
  CHECK(kernels::moment_left(1.0, kUnit, FracOrder{1.5}) ==
        doctest::Approx(4.0 / 15.0).epsilon(1e-13));
  // alpha = 1: elementary (x-a)^2/2.
  CHECK(kernels::moment_left(0.5, kUnit, FracOrder{1.0}) ==
        doctest::Approx(0.125).epsilon(1e-13));
}

TEST_CASE("moment_right closed form") {
  CHECK(kernels::moment_right(1.0, kUnit, FracOrder{1.5}) == 0.0);
  CHECK(kernels::moment_right(0.0, kUnit, FracOrder{1.0}) == doctest::Approx(0.5));
  CHECK(kernels::moment_right(0.5, kUnit, FracOrder{1.5}) ==
        doctest::Approx(std::pow(0.5, 2.5) / 2.5).epsilon(1e-14));
}

TEST_CASE("j3 reduces to moment_left and j4 to moment_right at lambda = 0") {
  for (double alpha : kAlphas) {
    for (double x : kXs) {
      const FracOrder order{alpha};
      CHECK(std::abs(kernels::j3_moment(x, kUnit, order, 0.0) -
                     kernels::moment_left(x, kUnit, order)) < 1e-13);
      CHECK(std::abs(kernels::j4_moment(x, kUnit, order, 0.0) -
                     kernels::moment_right(x, kUnit, order)) < 1e-13);
    }
  }
}

TEST_CASE("j3/j4 elementary two-triangle values at alpha = 1") {
  // c1 = 0.5: integral_0^0.5 (0.5-t) dt + integral_0.5^0.75 (t-0.5) dt
  CHECK(kernels::j3_moment(0.75, kUnit, FracOrder{1.0}, 0.5) ==
        doctest::Approx(0.15625).epsilon(1e-14));
  CHECK(kernels::j4_moment(0.25, kUnit, FracOrder{1.0}, 0.5) ==
        doctest::Approx(0.15625).epsilon(1e-14));
  CHECK(kernels::j3_moment(0.0, kUnit, FracOrder{1.5}, 0.5) == 0.0);
  CHECK(kernels::j4_moment(1.0, kUnit, FracOrder{1.5}, 0.5) == 0.0);
}

TEST_CASE("moments agree with weighted quadrature across the sweep grid") {
  for (double alpha : kAlphas) {
    const FracOrder order{alpha};
    for (double x : kXs) {
      CHECK(std::abs(kernels::moment_left(x, kUnit, order) -
                     quad::weighted_segment([](double t) { return t; }, 0.0, x, 1.0,
                                            alpha - 1.0, kCfg)) < 1e-10);
      CHECK(std::abs(kernels::moment_right(x, kUnit, order) -
                     quad::weighted_segment([](double) { return 1.0; }, x, 1.0, 1.0,
                                            alpha, kCfg)) < 1e-10);
      for (double lambda : kLambdas) {
        CHECK(std::abs(kernels::j3_moment(x, kUnit, order, lambda) -
                       j3_by_quadrature(x, kUnit, order, lambda)) < 1e-10);
        CHECK(std::abs(kernels::j4_moment(x, kUnit, order, lambda) -
                       j4_by_quadrature(x, kUnit, order, lambda)) < 1e-10);
      }
    }
  }
}

TEST_CASE("moments agree with the adaptive oracle on a spot grid") {
  for (double alpha : {1.0, 1.5, 2.5}) {
    for (double lambda : {0.0, 0.5, 1.0}) {
      const FracOrder order{alpha};
      const double x = 0.6;
      const double c1 = lambda;
      const double split = std::clamp(c1, 0.0, x);
      auto g = [&](double t) {
        return std::pow(1.0 - t, alpha - 1.0) * std::abs(t - c1);
      };
      const double via_oracle = quad::adaptive_oracle(g, 0.0, split, 1e-12) +
                                quad::adaptive_oracle(g, split, x, 1e-12);
      CHECK(std::abs(kernels::j3_moment(x, kUnit, order, lambda) - via_oracle) < 1e-10);
    }
  }
}

TEST_CASE("printed closed forms: j4 matches, j3 diverges by the documented defect") {
  // At lambda = 0 both printed forms collapse to the exact moments.
  for (double alpha : kAlphas) {
    const FracOrder order{alpha};
    for (double x : kXs) {
      CHECK(std::abs(kernels::j3_printed(x, kUnit, order, 0.0) -
                     kernels::j3_moment(x, kUnit, order, 0.0)) < 1e-13);
      CHECK(std::abs(kernels::j4_printed(x, kUnit, order, 0.0) -
                     kernels::j4_moment(x, kUnit, order, 0.0)) < 1e-13);
    }
  }
  // The printed j4 agrees with the exact moment wherever x < c2 (the case its
  // derivation split assumed).
  for (double alpha : kAlphas) {
    const FracOrder order{alpha};
    for (double lambda : {0.25, 0.5, 0.75}) {
      const double c2 = 1.0 - lambda;
      for (double x : kXs) {
        if (x >= c2) continue;
        CHECK(std::abs(kernels::j4_printed(x, kUnit, order, lambda) -
                       kernels::j4_moment(x, kUnit, order, lambda)) < 1e-13);
      }
    }
  }
  // The printed j3 bracket carries lambda*(b-a) where the exact evaluation
  // requires (alpha+1)*lambda; whenever the kink c1 falls inside (a, x) the
  // gap on [0,1] is lambda*(1-(alpha+1))/(alpha(alpha+1)).
  const double delta = kernels::j3_printed(0.75, kUnit, FracOrder{1.0}, 0.5) -
                       kernels::j3_moment(0.75, kUnit, FracOrder{1.0}, 0.5);
  CHECK(delta == doctest::Approx(-0.25).epsilon(1e-12));
  for (double alpha : kAlphas) {
    for (double lambda : {0.25, 0.5}) {  // keeps c1 = lambda below x = 0.75
      const double gap =
          kernels::j3_printed(0.75, kUnit, FracOrder{alpha}, lambda) -
          kernels::j3_moment(0.75, kUnit, FracOrder{alpha}, lambda);
      const double want = lambda * (1.0 - (alpha + 1.0)) / (alpha * (alpha + 1.0));
      CHECK(gap == doctest::Approx(want).epsilon(1e-10));
    }
  }
}
