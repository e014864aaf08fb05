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

#include "fracver/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "fracver/quad.hpp"
#include "fracver/specfun.hpp"

namespace fracver::oracle {

namespace {

void check_degree(const PolyCoeffs& p, const char* fn) {
  if (p.degree() > PolyCoeffs::kMaxDegree) {
    throw std::invalid_argument(std::string(fn) + ": degree > 12 unsupported");
  }
}

// Exact integer binomials; C(12,6) = 924 so everything here is exact in double.
double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

}  // namespace

double eval(const PolyCoeffs& p, const Interval& interval, double t) {
  const double u = t - interval.a;
  double acc = 0.0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    acc = acc * u + *it;
  }
  return acc;
}

PolyCoeffs derivative(const PolyCoeffs& p) {
  PolyCoeffs d;
  for (std::size_t k = 1; k < p.coeffs.size(); ++k) {
    d.coeffs.push_back(static_cast<double>(k) * p.coeffs[k]);
  }
  return d;
}

PolyCoeffs times_linear(const PolyCoeffs& p, const Interval& interval, double c) {
  // (t - c) = (a - c) + (t - a)
  const double shift = interval.a - c;
  PolyCoeffs q;
  q.coeffs.assign(p.coeffs.size() + 1, 0.0);
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    q.coeffs[k] += shift * p.coeffs[k];
    q.coeffs[k + 1] += p.coeffs[k];
  }
  return q;
}

double poly_rl_exact(const PolyCoeffs& p, const Interval& interval, FracOrder order,
                     double x) {
  check_degree(p, "poly_rl_exact");
  const double alpha = order.alpha;
  if (!(alpha > 0.0)) {
    throw std::domain_error("poly_rl_exact: requires alpha > 0");
  }
  if (!(x >= interval.a && x <= interval.b)) {
    throw std::domain_error("poly_rl_exact: x must lie in [a, b]");
  }
  const double u = x - interval.a;
  if (u == 0.0) return 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    if (p.coeffs[k] == 0.0) continue;
    const double dk = static_cast<double>(k);
    const double ratio =
        std::exp(specfun::log_gamma(dk + 1.0) - specfun::log_gamma(dk + alpha + 1.0));
    total += p.coeffs[k] * ratio * std::pow(u, dk + alpha);
  }
  return total;
}

double weighted_power_exact(const PolyCoeffs& p, const Interval& interval,
                            double exponent, double lo, double hi) {
  check_degree(p, "weighted_power_exact");
  if (!(exponent > -1.0)) {
    throw std::domain_error("weighted_power_exact: exponent must be > -1");
  }
  if (!(interval.a <= lo && lo <= hi && hi <= interval.b)) {
    throw std::domain_error("weighted_power_exact: requires a <= lo <= hi <= b");
  }
  if (lo == hi) return 0.0;
  const double a = interval.a;
  const double b = interval.b;
  const double w = b - a;
  const double ulo = b - lo;
  const double uhi = b - hi;
  // (t-a)^k = sum_j C(k,j) (b-a)^(k-j) (-1)^j (b-t)^j, then integrate
  // (b-t)^(exponent+j) termwise.
  double total = 0.0;
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    if (p.coeffs[k] == 0.0) continue;
    double inner = 0.0;
    for (std::size_t j = 0; j <= k; ++j) {
      const double e = exponent + static_cast<double>(j) + 1.0;
      const double piece = (std::pow(ulo, e) - std::pow(uhi, e)) / e;
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      inner += binomial(static_cast<int>(k), static_cast<int>(j)) * sign *
               std::pow(w, static_cast<double>(k - j)) * piece;
    }
    total += p.coeffs[k] * inner;
  }
  return total;
}

double poly_weighted_exact(const PolyCoeffs& p, const Interval& interval,
                           FracOrder order, double lo, double hi) {
  if (!(order.alpha >= 1.0)) {
    throw std::domain_error("poly_weighted_exact: requires alpha >= 1");
  }
  return weighted_power_exact(p, interval, order.alpha - 1.0, lo, hi);
}

double cross_validate(const corpus::TestFunction& f, const Interval& interval,
                      FracOrder order, double x, const QuadratureConfig& cfg) {
  if (!f.poly_form) {
    throw std::invalid_argument("cross_validate: function has no poly_form");
  }
  const double numeric = quad::rl_integral(f, interval, order, x, cfg);
  const double exact = poly_rl_exact(*f.poly_form, interval, order, x);
  return std::abs(numeric - exact);
}

}  // namespace fracver::oracle
