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

#include "fracver/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "fracver/kernels.hpp"
#include "fracver/quad.hpp"

namespace fracver::bounds {

namespace {

using identities::PathPolicy;
using identities::Provenance;

void require_convex(const corpus::TestFunction& f, const char* fn) {
  if (!f.convex) {
    throw std::invalid_argument(std::string(fn) + ": requires a convex function, '" +
                                f.name + "' is not marked convex");
  }
}

// The bracket multiplying f'_- in the lower bound and f'_+(a) in the upper:
//   (b-a)^alpha (b-x)^(1-alpha) + alpha (b-x)^2/(b-a) - (alpha+1)(b-x)
double left_coefficient(const Interval& iv, double alpha, double x) {
  const double w = iv.width();
  const double bx = iv.b - x;
  const double frac = alpha == 1.0 ? 1.0 : std::pow(bx, 1.0 - alpha);
  return std::pow(w, alpha) * frac + alpha * bx * bx / w - (alpha + 1.0) * bx;
}

double right_coefficient(const Interval& iv, double alpha, double x) {
  const double bx = iv.b - x;
  return alpha * bx * bx / iv.width();
}

BoundReport make_report(std::string variant, double lhs, double rhs, double slack,
                        Provenance prov) {
  BoundReport r;
  r.variant = std::move(variant);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.slack = slack;
  r.holds = r.margin >= -slack;
  r.provenance = prov;
  return r;
}

// (1/(b-a)) integral_a^b f via the independent adaptive integrator.
double elementary_mean(const corpus::TestFunction& f, const Interval& iv, double tol) {
  const auto edges = quad::segment_edges(iv.a, iv.b, f.breakpoints);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    sum += quad::adaptive_oracle(f.eval, edges[i], edges[i + 1], tol);
  }
  return sum / iv.width();
}

constexpr double kElementaryTol = 1e-13;

}  // namespace

BoundReport thm1_check(const corpus::TestFunction& f, const Interval& interval,
                       FracOrder order, double x, const QuadratureConfig& cfg,
                       const Slack& slack, PathPolicy policy) {
  require_convex(f, "thm1_check");
  const auto tb = identities::montgomery_terms(f, interval, order, x, cfg, policy);
  const double alpha = order.alpha;
  const double scale = 1.0 / (alpha * (alpha + 1.0));
  const double lhs = scale * (right_coefficient(interval, alpha, x) * f.deriv_right(x) -
                              left_coefficient(interval, alpha, x) * f.deriv_left(x));
  const double rhs = tb.mean_term - tb.kernel_correction - tb.lhs;
  return make_report("thm1", lhs, rhs, slack.pick(tb.provenance), tb.provenance);
}

BoundReport thm2_check(const corpus::TestFunction& f, const Interval& interval,
                       FracOrder order, double x, const QuadratureConfig& cfg,
                       const Slack& slack, PathPolicy policy) {
  require_convex(f, "thm2_check");
  const double da = f.deriv_right(interval.a);
  const double db = f.deriv_left(interval.b);
  if (!std::isfinite(da) || !std::isfinite(db)) {
    throw std::invalid_argument("thm2_check: f'_+(a) and f'_-(b) must be finite");
  }
  const auto tb = identities::montgomery_terms(f, interval, order, x, cfg, policy);
  const double alpha = order.alpha;
  const double scale = 1.0 / (alpha * (alpha + 1.0));
  const double lhs = tb.mean_term - tb.kernel_correction - tb.lhs;
  const double rhs = scale * (right_coefficient(interval, alpha, x) * db -
                              left_coefficient(interval, alpha, x) * da);
  return make_report("thm2", lhs, rhs, slack.pick(tb.provenance), tb.provenance);
}

BoundReport cor1_check(const corpus::TestFunction& f, const Interval& interval,
                       double x, const Slack& slack) {
  require_convex(f, "cor1_check");
  const double bx = interval.b - x;
  const double ax = interval.a - x;
  const double lhs = 0.5 * (bx * bx * f.deriv_right(x) - ax * ax * f.deriv_left(x));
  const double mean = elementary_mean(f, interval, kElementaryTol);
  const double rhs = interval.width() * (mean - f.eval(x));
  return make_report("cor1", lhs, rhs, slack.quadrature, Provenance::quadrature);
}

BoundReport cor2_check(const corpus::TestFunction& f, const Interval& interval,
                       double x, const Slack& slack) {
  require_convex(f, "cor2_check");
  const double bx = interval.b - x;
  const double ax = interval.a - x;
  const double mean = elementary_mean(f, interval, kElementaryTol);
  const double lhs = interval.width() * (mean - f.eval(x));
  const double rhs = 0.5 * (bx * bx * f.deriv_left(interval.b) -
                            ax * ax * f.deriv_right(interval.a));
  return make_report("cor2", lhs, rhs, slack.quadrature, Provenance::quadrature);
}

std::pair<BoundReport, BoundReport> midpoint_chain(const corpus::TestFunction& f,
                                                   const Interval& interval,
                                                   const Slack& slack) {
  require_convex(f, "midpoint_chain");
  const double m = interval.midpoint();
  const double scale = interval.width() / 8.0;
  const double gap = scale * (f.deriv_right(m) - f.deriv_left(m));
  const double mid = elementary_mean(f, interval, kElementaryTol) - f.eval(m);
  const double upper = scale * (f.deriv_left(interval.b) - f.deriv_right(interval.a));

  BoundReport first =
      make_report("midpoint1", gap, mid, slack.quadrature, Provenance::quadrature);
  // The first chain claims 0 <= gap <= mid; fold both links into the margin
  // so holds <=> margin >= -slack stays true for the two-sided report.
  first.margin = std::min(gap, mid - gap);
  first.holds = first.margin >= -slack.quadrature;
  BoundReport second =
      make_report("midpoint2", mid, upper, slack.quadrature, Provenance::quadrature);
  return {first, second};
}

double thm3_rhs_printed(const Interval& interval, FracOrder order, double x,
                        double lambda, double deriv_bound) {
  const double alpha = order.alpha;
  const double w = interval.width();
  const double bx = interval.b - x;
  const double frac = alpha == 1.0 ? 1.0 : std::pow(bx, 1.0 - alpha);
  const double brace =
      std::pow(w, alpha) * frac *
          (2.0 * std::pow(lambda, alpha + 1.0) +
           2.0 * std::pow(1.0 - lambda, alpha + 1.0) + lambda * w - 1.0) +
      bx * (2.0 * alpha * bx / w - (alpha + 1.0));
  return deriv_bound / (alpha * (alpha + 1.0)) * brace;
}

std::pair<BoundReport, BoundReport> thm3_check(const corpus::TestFunction& f,
                                               const Interval& interval, FracOrder order,
                                               double x, double lambda,
                                               const QuadratureConfig& cfg,
                                               const Slack& slack, PathPolicy policy) {
  if (!f.deriv_bound_M) {
    throw std::invalid_argument("thm3_check: requires deriv_bound_M on '" + f.name + "'");
  }
  const double M = *f.deriv_bound_M;
  const auto tb = identities::generalized_terms(f, interval, order, x, lambda, cfg, policy);
  // |(1-2l) f(x) - mean + boundary + kernel_correction|: by the identity this
  // equals |J_a^alpha (P3 f')(b)|, which the moments bound.
  const double lhs =
      std::abs(tb.lhs - tb.mean_term + tb.boundary_term + tb.kernel_correction);
  const double alpha = order.alpha;
  const double frac = alpha == 1.0 ? 1.0 : std::pow(interval.b - x, 1.0 - alpha);
  const double moments = kernels::j3_moment(x, interval, order, lambda) +
                         kernels::j4_moment(x, interval, order, lambda);
  const double rhs_exact = M * frac / interval.width() * moments;
  const double rhs_printed = thm3_rhs_printed(interval, order, x, lambda, M);
  return {make_report("thm3_exact", lhs, rhs_exact, slack.pick(tb.provenance),
                      tb.provenance),
          make_report("thm3_printed", lhs, rhs_printed, slack.pick(tb.provenance),
                      tb.provenance)};
}

}  // namespace fracver::bounds
