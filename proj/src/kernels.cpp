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

#include "fracver/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "fracver/specfun.hpp"

namespace fracver::kernels {

namespace {

void require_in_interval(double v, const Interval& iv, const char* what) {
  if (!(v >= iv.a && v <= iv.b)) {
    throw std::domain_error(std::string(what) + " must lie in [a, b]");
  }
}

void require_order_ge1(FracOrder order, const char* fn) {
  if (!(order.alpha >= 1.0)) {
    throw std::domain_error(std::string(fn) + ": requires alpha >= 1");
  }
}

void require_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::domain_error("lambda must lie in [0, 1]");
  }
}

// (b-x)^(1-alpha) Gamma(alpha); exactly 1 at alpha = 1 so the kernels reduce
// to P1 without pow() noise.
double fractional_prefactor(double x, const Interval& iv, FracOrder order) {
  if (order.alpha == 1.0) return 1.0;
  if (x == iv.b) {
    throw std::domain_error("fractional kernel: (b-x)^(1-alpha) is singular at x = b");
  }
  return std::pow(iv.b - x, 1.0 - order.alpha) * specfun::gamma(order.alpha);
}

// integral_lo^hi (b-t)^(alpha-1) (t-c) dt = (b-c) W0 - W1 with
// W_k = ((b-lo)^(alpha+k) - (b-hi)^(alpha+k)) / (alpha+k).
double linear_weighted_moment(double lo, double hi, double b, double alpha, double c) {
  if (hi <= lo) return 0.0;
  const double ulo = b - lo;
  const double uhi = b - hi;
  const double w0 = (std::pow(ulo, alpha) - std::pow(uhi, alpha)) / alpha;
  const double w1 = (std::pow(ulo, alpha + 1.0) - std::pow(uhi, alpha + 1.0)) / (alpha + 1.0);
  return (b - c) * w0 - w1;
}

}  // namespace

double p1(double x, double t, const Interval& interval) {
  require_in_interval(x, interval, "p1: x");
  require_in_interval(t, interval, "p1: t");
  const double w = interval.width();
  return t < x ? (t - interval.a) / w : (t - interval.b) / w;
}

double p2(double x, double t, const Interval& interval, FracOrder order) {
  require_order_ge1(order, "p2");
  return p1(x, t, interval) * fractional_prefactor(x, interval, order);
}

double p3(double x, double t, const Interval& interval, FracOrder order,
          double lambda) {
  require_order_ge1(order, "p3");
  require_lambda(lambda);
  require_in_interval(x, interval, "p3: x");
  require_in_interval(t, interval, "p3: t");
  const double a = interval.a;
  const double b = interval.b;
  const double w = interval.width();
  const double shifted =
      t < x ? t - (1.0 - lambda) * a - lambda * b : t - (1.0 - lambda) * b - lambda * a;
  return shifted / w * fractional_prefactor(x, interval, order);
}

double moment_left(double x, const Interval& interval, FracOrder order) {
  require_order_ge1(order, "moment_left");
  require_in_interval(x, interval, "moment_left: x");
  const double alpha = order.alpha;
  const double w = interval.width();
  const double bx = interval.b - x;
  return (std::pow(w, alpha + 1.0) +
          std::pow(bx, alpha) * (alpha * bx - (alpha + 1.0) * w)) /
         (alpha * (alpha + 1.0));
}

double moment_right(double x, const Interval& interval, FracOrder order) {
  require_order_ge1(order, "moment_right");
  require_in_interval(x, interval, "moment_right: x");
  const double alpha = order.alpha;
  return std::pow(interval.b - x, alpha + 1.0) / (alpha + 1.0);
}

double j3_moment(double x, const Interval& interval, FracOrder order, double lambda) {
  require_order_ge1(order, "j3_moment");
  require_lambda(lambda);
  require_in_interval(x, interval, "j3_moment: x");
  const double a = interval.a;
  const double b = interval.b;
  const double alpha = order.alpha;
  const double c1 = a + lambda * (b - a);
  if (x <= c1) {
    // |t - c1| = c1 - t on all of [a, x]
    return -linear_weighted_moment(a, x, b, alpha, c1);
  }
  return -linear_weighted_moment(a, c1, b, alpha, c1) +
         linear_weighted_moment(c1, x, b, alpha, c1);
}

double j4_moment(double x, const Interval& interval, FracOrder order, double lambda) {
  require_order_ge1(order, "j4_moment");
  require_lambda(lambda);
  require_in_interval(x, interval, "j4_moment: x");
  const double a = interval.a;
  const double b = interval.b;
  const double alpha = order.alpha;
  const double c2 = b - lambda * (b - a);
  if (x >= c2) {
    // |t - c2| = t - c2 on all of [x, b]
    return linear_weighted_moment(x, b, b, alpha, c2);
  }
  return -linear_weighted_moment(x, c2, b, alpha, c2) +
         linear_weighted_moment(c2, b, b, alpha, c2);
}

double j3_printed(double x, const Interval& interval, FracOrder order, double lambda) {
  require_order_ge1(order, "j3_printed");
  require_lambda(lambda);
  require_in_interval(x, interval, "j3_printed: x");
  const double alpha = order.alpha;
  const double w = interval.width();
  const double bx = interval.b - x;
  const double denom = alpha * (alpha + 1.0);
  return std::pow(w, alpha + 1.0) / denom *
             (2.0 * std::pow(1.0 - lambda, alpha + 1.0) + lambda * w - 1.0) +
         std::pow(bx, alpha) / denom *
             (alpha * bx - (1.0 - lambda) * w * (alpha + 1.0));
}

double j4_printed(double x, const Interval& interval, FracOrder order, double lambda) {
  require_order_ge1(order, "j4_printed");
  require_lambda(lambda);
  require_in_interval(x, interval, "j4_printed: x");
  const double alpha = order.alpha;
  const double w = interval.width();
  const double bx = interval.b - x;
  const double denom = alpha * (alpha + 1.0);
  return 2.0 * std::pow(lambda, alpha + 1.0) * std::pow(w, alpha + 1.0) / denom +
         std::pow(bx, alpha) / denom * (alpha * bx - lambda * w * (alpha + 1.0));
}

}  // namespace fracver::kernels
