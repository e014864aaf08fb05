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

#include "fracver/identities.hpp"

#include <cmath>
#include <stdexcept>

#include "fracver/kernels.hpp"
#include "fracver/oracle.hpp"
#include "fracver/quad.hpp"
#include "fracver/specfun.hpp"

namespace fracver::identities {

namespace {

struct Context {
  const corpus::TestFunction& f;
  const Interval& iv;
  double alpha;
  double x;
  const QuadratureConfig& cfg;
  bool exact;          // exact polynomial route?
  double prefactor;    // (b-x)^(1-alpha), exactly 1 at alpha = 1
};

void validate_inputs(const corpus::TestFunction& f, const Interval& iv,
                     FracOrder order, double x) {
  if (!(order.alpha >= 1.0)) {
    throw std::domain_error("identities: requires alpha >= 1, got " +
                            std::to_string(order.alpha));
  }
  if (!(x > iv.a && x < iv.b)) {
    throw std::domain_error("identities: x must be interior to (a, b)");
  }
  if (!f.eval) throw std::invalid_argument("identities: function has no eval");
}

bool choose_exact(const corpus::TestFunction& f, PathPolicy policy) {
  switch (policy) {
    case PathPolicy::force_quadrature:
      return false;
    case PathPolicy::force_exact:
      if (!f.poly_form) {
        throw std::invalid_argument("identities: exact path requires poly_form");
      }
      return true;
    case PathPolicy::automatic:
      return f.poly_form.has_value();
  }
  return false;
}

Context make_context(const corpus::TestFunction& f, const Interval& iv, FracOrder order,
                     double x, const QuadratureConfig& cfg, PathPolicy policy) {
  validate_inputs(f, iv, order, x);
  validate(cfg);
  const double alpha = order.alpha;
  const double prefactor = alpha == 1.0 ? 1.0 : std::pow(iv.b - x, 1.0 - alpha);
  return Context{f, iv, alpha, x, cfg, choose_exact(f, policy), prefactor};
}

// Gamma(alpha)/(b-a) (b-x)^(1-alpha) J_a^alpha f(b)
double mean_term(const Context& c) {
  const FracOrder order{c.alpha};
  const double jb = c.exact
                        ? oracle::poly_rl_exact(*c.f.poly_form, c.iv, order, c.iv.b)
                        : quad::rl_integral(c.f, c.iv, order, c.iv.b, c.cfg);
  return specfun::gamma(c.alpha) / c.iv.width() * c.prefactor * jb;
}

// Sum of integral_piece (b-t)^exponent (t-c) f(t) dt over [lo, hi] split at
// the function's breakpoints (quadrature route).
double kernel_weighted_quad(const Context& c, const quad::Fn& g, double lo, double hi,
                            double exponent, double shift_c) {
  const auto edges = quad::segment_edges(lo, hi, c.f.breakpoints);
  QuadratureConfig piece_cfg = c.cfg;
  piece_cfg.target_abs_tol = c.cfg.target_abs_tol / static_cast<double>(edges.size());
  double total = 0.0;
  auto integrand = [&](double t) { return (t - shift_c) * g(t); };
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    total += quad::weighted_segment(integrand, edges[i], edges[i + 1], c.iv.b,
                                    exponent, piece_cfg);
  }
  return total;
}

// Plain weighted integral of g over [lo, hi] split at breakpoints.
double weighted_quad(const Context& c, const quad::Fn& g, double lo, double hi,
                     double exponent) {
  const auto edges = quad::segment_edges(lo, hi, c.f.breakpoints);
  QuadratureConfig piece_cfg = c.cfg;
  piece_cfg.target_abs_tol = c.cfg.target_abs_tol / static_cast<double>(edges.size());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    total += quad::weighted_segment(g, edges[i], edges[i + 1], c.iv.b, exponent,
                                    piece_cfg);
  }
  return total;
}

double deriv_fn(const Context& c, double t) { return c.f.deriv_right(t); }

// J_a^(alpha-1) of (P2(x,.) f) at b. The upper branch is proportional to
// (t-b), which cancels one power of the (b-t)^(alpha-2) weight and keeps the
// term finite for alpha in (1,2); the lower piece never touches t = b.
double p2_kernel_correction(const Context& c) {
  if (c.alpha == 1.0) return 0.0;  // J^0 convention: P2(x,b) f(b) = 0
  const double a = c.iv.a;
  const double b = c.iv.b;
  double lower, upper;
  if (c.exact) {
    const auto tf = oracle::times_linear(*c.f.poly_form, c.iv, a);
    lower = oracle::weighted_power_exact(tf, c.iv, c.alpha - 2.0, a, c.x);
    upper = -oracle::weighted_power_exact(*c.f.poly_form, c.iv, c.alpha - 1.0, c.x, b);
  } else {
    lower = kernel_weighted_quad(c, c.f.eval, a, c.x, c.alpha - 2.0, a);
    upper = -weighted_quad(c, c.f.eval, c.x, b, c.alpha - 1.0);
  }
  return (c.alpha - 1.0) * c.prefactor / c.iv.width() * (lower + upper);
}

// J_a^alpha of (P2(x,.) f') at b, with the upper branch folded into the
// weight exponent: (b-t)^(alpha-1)(t-b) = -(b-t)^alpha.
double p2_derivative_term(const Context& c) {
  const double a = c.iv.a;
  const double b = c.iv.b;
  double lower, upper;
  if (c.exact) {
    const auto dp = oracle::derivative(*c.f.poly_form);
    const auto tdp = oracle::times_linear(dp, c.iv, a);
    lower = oracle::weighted_power_exact(tdp, c.iv, c.alpha - 1.0, a, c.x);
    upper = -oracle::weighted_power_exact(dp, c.iv, c.alpha, c.x, b);
  } else {
    auto fprime = [&](double t) { return deriv_fn(c, t); };
    lower = kernel_weighted_quad(c, fprime, a, c.x, c.alpha - 1.0, a);
    upper = -weighted_quad(c, fprime, c.x, b, c.alpha);
  }
  return c.prefactor / c.iv.width() * (lower + upper);
}

}  // namespace

const char* to_string(Provenance p) {
  return p == Provenance::exact_oracle ? "exact-oracle" : "quadrature";
}

TermBreakdown montgomery_terms(const corpus::TestFunction& f, const Interval& interval,
                               FracOrder order, double x, const QuadratureConfig& cfg,
                               PathPolicy policy) {
  const Context c = make_context(f, interval, order, x, cfg, policy);
  TermBreakdown tb;
  tb.lhs = f.eval(x);
  tb.mean_term = mean_term(c);
  tb.boundary_term = 0.0;
  tb.kernel_correction = p2_kernel_correction(c);
  tb.derivative_term = p2_derivative_term(c);
  tb.provenance = c.exact ? Provenance::exact_oracle : Provenance::quadrature;
  return tb;
}

double montgomery_residual(const corpus::TestFunction& f, const Interval& interval,
                           FracOrder order, double x, const QuadratureConfig& cfg,
                           PathPolicy policy) {
  return montgomery_terms(f, interval, order, x, cfg, policy).residual();
}

double rhs_representation(const corpus::TestFunction& f, const Interval& interval,
                          FracOrder order, double x, const QuadratureConfig& cfg,
                          PathPolicy policy) {
  const Context c = make_context(f, interval, order, x, cfg, policy);
  const double a = interval.a;
  const double b = interval.b;
  double lower, upper;
  if (c.exact) {
    const auto dp = oracle::derivative(*f.poly_form);
    lower = oracle::weighted_power_exact(oracle::times_linear(dp, interval, a),
                                         interval, c.alpha - 1.0, a, x);
    upper = oracle::weighted_power_exact(dp, interval, c.alpha, x, b);
  } else {
    auto fprime = [&](double t) { return deriv_fn(c, t); };
    lower = kernel_weighted_quad(c, fprime, a, x, c.alpha - 1.0, a);
    upper = weighted_quad(c, fprime, x, b, c.alpha);
  }
  return c.prefactor / interval.width() * (lower - upper);
}

TermBreakdown generalized_terms(const corpus::TestFunction& f, const Interval& interval,
                                FracOrder order, double x, double lambda,
                                const QuadratureConfig& cfg, PathPolicy policy) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::domain_error("generalized_terms: lambda must lie in [0, 1]");
  }
  const Context c = make_context(f, interval, order, x, cfg, policy);
  const double a = interval.a;
  const double b = interval.b;
  const double w = interval.width();
  const double c1 = a + lambda * w;  // kink of the lower kernel branch
  const double c2 = b - lambda * w;  // kink of the upper kernel branch

  TermBreakdown tb;
  tb.provenance = c.exact ? Provenance::exact_oracle : Provenance::quadrature;
  tb.lhs = (1.0 - 2.0 * lambda) * f.eval(x);
  tb.mean_term = mean_term(c);
  tb.boundary_term =
      lambda == 0.0
          ? 0.0
          : lambda * std::pow(w / (b - x), c.alpha - 1.0) * f.eval(a);

  if (c.alpha == 1.0) {
    // J^0 convention applied literally: the kernel-correction collapses to
    // P3(x,b) f(b) = lambda f(b).
    tb.kernel_correction = lambda * f.eval(b);
  } else if (c.exact) {
    const auto low_poly = oracle::times_linear(*f.poly_form, interval, c1);
    const auto up_poly = oracle::times_linear(*f.poly_form, interval, c2);
    const double lower =
        oracle::weighted_power_exact(low_poly, interval, c.alpha - 2.0, a, x);
    const double upper =
        oracle::weighted_power_exact(up_poly, interval, c.alpha - 2.0, x, b);
    tb.kernel_correction = (c.alpha - 1.0) * c.prefactor / w * (lower + upper);
  } else {
    const double lower = kernel_weighted_quad(c, f.eval, a, x, c.alpha - 2.0, c1);
    // Split (t-c2) = (t-b) + (b-c2): the (t-b) part cancels one weight power,
    // the remainder keeps the integrable exponent alpha-2 > -1.
    double upper = -weighted_quad(c, f.eval, x, b, c.alpha - 1.0);
    if (lambda != 0.0) {
      upper += (b - c2) * weighted_quad(c, f.eval, x, b, c.alpha - 2.0);
    }
    tb.kernel_correction = (c.alpha - 1.0) * c.prefactor / w * (lower + upper);
  }

  if (c.exact) {
    const auto dp = oracle::derivative(*f.poly_form);
    const double lower = oracle::weighted_power_exact(
        oracle::times_linear(dp, interval, c1), interval, c.alpha - 1.0, a, x);
    const double upper = oracle::weighted_power_exact(
        oracle::times_linear(dp, interval, c2), interval, c.alpha - 1.0, x, b);
    tb.derivative_term = c.prefactor / w * (lower + upper);
  } else {
    auto fprime = [&](double t) { return deriv_fn(c, t); };
    const double lower = kernel_weighted_quad(c, fprime, a, x, c.alpha - 1.0, c1);
    const double upper = kernel_weighted_quad(c, fprime, x, b, c.alpha - 1.0, c2);
    tb.derivative_term = c.prefactor / w * (lower + upper);
  }
  return tb;
}

double generalized_residual(const corpus::TestFunction& f, const Interval& interval,
                            FracOrder order, double x, double lambda,
                            const QuadratureConfig& cfg, PathPolicy policy) {
  return generalized_terms(f, interval, order, x, lambda, cfg, policy).residual();
}

ClassicalTerms classical_montgomery(const corpus::TestFunction& f,
                                    const Interval& interval, double x, double tol) {
  if (!(x > interval.a && x < interval.b)) {
    throw std::domain_error("classical_montgomery: x must be interior");
  }
  ClassicalTerms terms;
  {
    auto edges = quad::segment_edges(interval.a, interval.b, f.breakpoints);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      sum += quad::adaptive_oracle(f.eval, edges[i], edges[i + 1], tol);
    }
    terms.mean = sum / interval.width();
  }
  {
    std::vector<double> candidates = f.breakpoints;
    candidates.push_back(x);
    auto edges = quad::segment_edges(interval.a, interval.b, candidates);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      // The oracle samples piece endpoints, so both the kernel branch and the
      // one-sided derivative must take their piece-interior values there;
      // mixing branches at a shared edge leaves a spurious jump.
      const double hi = edges[i + 1];
      const bool below = 0.5 * (edges[i] + hi) < x;
      const double anchor = below ? interval.a : interval.b;
      auto g = [&, hi](double t) {
        const double d = t >= hi ? f.deriv_left(t) : f.deriv_right(t);
        return (t - anchor) / interval.width() * d;
      };
      sum += quad::adaptive_oracle(g, edges[i], hi, tol);
    }
    terms.kernel_term = sum;
  }
  return terms;
}

}  // namespace fracver::identities
