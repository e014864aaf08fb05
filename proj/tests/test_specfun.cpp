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
#include <random>

#include "fracver/specfun.hpp"

using namespace fracver;

namespace {
double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}
}  // namespace

TEST_CASE("gamma at standard points") {
  CHECK(specfun::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(specfun::gamma(2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(specfun::gamma(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
  // Gamma(4.5) by recurrence from Gamma(1.5) = sqrt(pi)/2.
  const double g45 = 3.5 * 2.5 * 1.5 * (std::sqrt(M_PI) / 2.0);
  CHECK(rel_err(specfun::gamma(4.5), g45) < 1e-14);
}

TEST_CASE("gamma matches the library implementation on [0.5, 30]") {
  for (int i = 0; i <= 295; ++i) {
    const double x = 0.5 + i * 0.1;
    CHECK(rel_err(specfun::gamma(x), std::tgamma(x)) < 1e-13);
  }
}

TEST_CASE("log_gamma matches std::lgamma including large arguments") {
  for (double x : {0.1, 0.5, 1.0, 3.7, 10.0, 30.0, 100.0, 171.0, 500.0, 1e4}) {
    CHECK(rel_err(specfun::log_gamma(x), std::lgamma(x)) < 1e-13);
  }
  // The log-domain path keeps large arguments finite.
  CHECK(std::isfinite(specfun::gamma(170.0)));
  CHECK(rel_err(specfun::gamma(170.0), std::exp(std::lgamma(170.0))) < 1e-12);
}

TEST_CASE("gamma recurrence holds on a 100-point grid") {
  for (int i = 0; i < 100; ++i) {
    const double x = 0.5 + i * (19.5 / 99.0);
    const double lhs = specfun::gamma(x + 1.0);
    const double rhs = x * specfun::gamma(x);
    CHECK(rel_err(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("gamma domain errors") {
  CHECK_THROWS_AS(specfun::gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(specfun::gamma(-2.5), std::domain_error);
  CHECK_THROWS_AS(specfun::log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(specfun::beta(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(specfun::beta(1.0, -1.0), std::domain_error);
}

TEST_CASE("beta closed forms") {
  CHECK(specfun::beta(1.0, 2.0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(specfun::beta(2.0, 1.0) == doctest::Approx(0.5).epsilon(1e-13));
  // B(2, q) = 1/(q(q+1)), checked at q = 1.5.
  CHECK(specfun::beta(2.0, 1.5) == doctest::Approx(1.0 / 3.75).epsilon(1e-13));
}

TEST_CASE("beta symmetry is exact as computed") {
  std::mt19937 rng(20260808);
  std::uniform_real_distribution<double> dist(0.1, 15.0);
  for (int i = 0; i < 200; ++i) {
    const double p = dist(rng);
    const double q = dist(rng);
    CHECK(specfun::beta(p, q) == specfun::beta(q, p));
  }
}

TEST_CASE("beta two-way agreement: Gamma ratio vs log-domain") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> dist(0.2, 12.0);
  for (int i = 0; i < 200; ++i) {
    const double p = dist(rng);
    const double q = dist(rng);
    const double ratio = specfun::gamma(p) * specfun::gamma(q) / specfun::gamma(p + q);
    CHECK(rel_err(specfun::beta(p, q), ratio) < 1e-12);
  }
}
