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

#include "fracver/quad.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "fracver/errors.hpp"
#include "fracver/specfun.hpp"

namespace fracver::quad {

namespace {

// ---------------------------------------------------------------------------
// Gauss--Jacobi abscissas and weights on [-1,1] for the weight
// (1-x)^alf (1+x)^bet, found by Newton iteration on the three-term
// recurrence for the Jacobi polynomials. Roots emerge in descending order.
// ---------------------------------------------------------------------------
void gauss_jacobi_raw(int n, double alf, double bet, std::vector<double>& x,
                      std::vector<double>& w) {
  constexpr int kMaxIt = 40;
  constexpr double kEps = 1e-15;
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const double alfbet = alf + bet;
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    // Startup guesses (tuned for smooth convergence of the Newton steps).
    if (i == 0) {
      const double an = alf / n;
      const double bn = bet / n;
      const double r1 = (1.0 + alf) * (2.78 / (4.0 + n * n) + 0.768 * an / n);
      const double r2 = 1.0 + 1.48 * an + 0.96 * bn + 0.452 * an * an + 0.83 * an * bn;
      z = 1.0 - r1 / r2;
    } else if (i == 1) {
      const double r1 = (4.1 + alf) / ((1.0 + alf) * (1.0 + 0.156 * alf));
      const double r2 = 1.0 + 0.06 * (n - 8.0) * (1.0 + 0.12 * alf) / n;
      const double r3 = 1.0 + 0.012 * bet * (1.0 + 0.25 * std::abs(alf)) / n;
      z -= (1.0 - z) * r1 * r2 * r3;
    } else if (i == 2) {
      const double r1 = (1.67 + 0.28 * alf) / (1.0 + 0.37 * alf);
      const double r2 = 1.0 + 0.22 * (n - 8.0) / n;
      const double r3 = 1.0 + 8.0 * bet / ((6.28 + bet) * n * n);
      z -= (x[0] - z) * r1 * r2 * r3;
    } else if (i == n - 2) {
      const double r1 = (1.0 + 0.235 * bet) / (0.766 + 0.119 * bet);
      const double r2 = 1.0 / (1.0 + 0.639 * (n - 4.0) / (1.0 + 0.71 * (n - 4.0)));
      const double r3 = 1.0 / (1.0 + 20.0 * alf / ((7.5 + alf) * n * n));
      z += (z - x[i - 2]) * r1 * r2 * r3;
    } else if (i == n - 1) {
      const double r1 = (1.0 + 0.37 * bet) / (1.67 + 0.28 * bet);
      const double r2 = 1.0 / (1.0 + 0.22 * (n - 8.0) / n);
      const double r3 = 1.0 / (1.0 + 8.0 * alf / ((6.28 + alf) * n * n));
      z += (z - x[i - 2]) * r1 * r2 * r3;
    } else {
      z = 3.0 * x[i - 1] - 3.0 * x[i - 2] + x[i - 3];
    }
    double p1 = 0.0, p2 = 0.0, pp = 0.0, temp = 0.0;
    bool converged = false;
    for (int its = 0; its < kMaxIt; ++its) {
      temp = 2.0 + alfbet;
      p1 = (alf - bet + temp * z) / 2.0;
      p2 = 1.0;
      for (int j = 2; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        temp = 2.0 * j + alfbet;
        const double aa = 2.0 * j * (j + alfbet) * (temp - 2.0);
        const double bb = (temp - 1.0) * (alf * alf - bet * bet + temp * (temp - 2.0) * z);
        const double cc = 2.0 * (j - 1.0 + alf) * (j - 1.0 + bet) * temp;
        p1 = (bb * p2 - cc * p3) / aa;
      }
      pp = (n * (alf - bet - temp * z) * p1 + 2.0 * (n + alf) * (n + bet) * p2) /
           (temp * (1.0 - z * z));
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= kEps) {
        converged = true;
        break;
      }
    }
    if (!converged || !std::isfinite(z)) {
      throw ConvergenceError("gauss_jacobi: Newton iteration failed for node " +
                                 std::to_string(i) + " (n=" + std::to_string(n) +
                                 ", bet=" + std::to_string(bet) + ")",
                             z);
    }
    x[i] = z;
    w[i] = std::exp(specfun::log_gamma(alf + n) + specfun::log_gamma(bet + n) -
                    specfun::log_gamma(n + 1.0) - specfun::log_gamma(n + alfbet + 1.0)) *
           temp * std::pow(2.0, alfbet) / (pp * p2);
  }
}

JacobiRule build_rule(double exponent, int n) {
  std::vector<double> x, w;
  gauss_jacobi_raw(n, 0.0, exponent, x, w);
  JacobiRule rule;
  rule.exponent = exponent;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Map (1+xi)^bet on [-1,1] to s^bet on [0,1]; flip to ascending order.
  const double scale = std::pow(2.0, -exponent - 1.0);
  for (int i = 0; i < n; ++i) {
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + x[i]);
    rule.weights[n - 1 - i] = scale * w[i];
  }
  return rule;
}

std::map<std::pair<int, double>, JacobiRule>& rule_cache() {
  static std::map<std::pair<int, double>, JacobiRule> cache;
  return cache;
}

std::mutex& rule_mutex() {
  static std::mutex m;
  return m;
}

// Fixed-size Gauss--Legendre panel via the cached exponent-0 rule.
double gl_panel(const Fn& g, double lo, double hi, int n) {
  const JacobiRule& rule = jacobi_rule(0.0, n);
  const double h = hi - lo;
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * g(lo + h * rule.nodes[i]);
  }
  return h * sum;
}

double gl_adaptive_rec(const Fn& g, double lo, double hi, double whole, double tol,
                       int depth) {
  const double mid = 0.5 * (lo + hi);
  const double left = gl_panel(g, lo, mid, 16);
  const double right = gl_panel(g, mid, hi, 16);
  const double refined = left + right;
  const double err = std::abs(refined - whole);
  if (!std::isfinite(refined)) {
    throw ConvergenceError("gl_adaptive: non-finite integrand value", whole);
  }
  if (err <= tol || depth <= 0) {
    if (err > tol && depth <= 0) {
      throw ConvergenceError("gl_adaptive: subdivision budget exhausted", refined);
    }
    return refined;
  }
  return gl_adaptive_rec(g, lo, mid, left, 0.5 * tol, depth - 1) +
         gl_adaptive_rec(g, mid, hi, right, 0.5 * tol, depth - 1);
}

// Smooth-segment integral; the caller guarantees g has no interior kinks.
double gl_adaptive(const Fn& g, double lo, double hi, double tol, int depth) {
  if (hi <= lo) return 0.0;
  return gl_adaptive_rec(g, lo, hi, gl_panel(g, lo, hi, 16), tol, depth);
}

double jacobi_apply(const JacobiRule& rule, const Fn& g, double lo, double b) {
  const double h = b - lo;
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * g(b - h * rule.nodes[i]);
  }
  return std::pow(h, rule.exponent + 1.0) * sum;
}

// Segment ending exactly at the weight's anchor: absorb (b-t)^exponent into
// the rule, with an n vs n+8 disagreement probe and bisection fallback.
double jacobi_segment(const Fn& g, double lo, double b, double exponent,
                      const QuadratureConfig& cfg, double tol, int depth) {
  const double coarse = jacobi_apply(jacobi_rule(exponent, cfg.jacobi_nodes), g, lo, b);
  const double fine = jacobi_apply(jacobi_rule(exponent, cfg.jacobi_nodes + 8), g, lo, b);
  if (!std::isfinite(fine)) {
    throw ConvergenceError("jacobi_segment: non-finite integrand value", coarse);
  }
  const double err = std::abs(fine - coarse);
  if (err <= std::max(tol, 64.0 * std::abs(fine) * 1e-16)) return fine;
  if (depth <= 0) {
    throw ConvergenceError("jacobi_segment: subdivision budget exhausted", fine);
  }
  const double mid = 0.5 * (lo + b);
  auto weighted = [&](double t) { return std::pow(b - t, exponent) * g(t); };
  return gl_adaptive(weighted, lo, mid, 0.5 * tol, depth - 1) +
         jacobi_segment(g, mid, b, exponent, cfg, 0.5 * tol, depth - 1);
}

}  // namespace

const JacobiRule& jacobi_rule(double exponent, int n) {
  if (!(exponent > -1.0)) {
    throw std::domain_error("jacobi_rule: weight exponent must be > -1, got " +
                            std::to_string(exponent));
  }
  if (n < 2) throw std::invalid_argument("jacobi_rule: need at least 2 nodes");
  const auto key = std::make_pair(n, exponent);
  std::lock_guard<std::mutex> lock(rule_mutex());
  auto& cache = rule_cache();
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, build_rule(exponent, n)).first;
  }
  return it->second;  // std::map references stay valid across inserts
}

double weighted_segment(const Fn& g, double lo, double hi, double b_anchor,
                        double exponent, const QuadratureConfig& cfg) {
  validate(cfg);
  if (!(lo <= hi && hi <= b_anchor)) {
    throw std::domain_error("weighted_segment: requires lo <= hi <= anchor");
  }
  const double span = hi - lo;
  if (span <= 0.0) return 0.0;
  const double tol = cfg.target_abs_tol;
  const double gap = b_anchor - hi;
  if (gap <= 1e-15 * std::max(1.0, std::abs(b_anchor))) {
    return jacobi_segment(g, lo, b_anchor, exponent, cfg, tol, cfg.max_subdivisions);
  }
  if (exponent == 0.0) {
    return gl_adaptive(g, lo, hi, tol, cfg.max_subdivisions);
  }
  auto weighted = [&](double t) { return std::pow(b_anchor - t, exponent) * g(t); };
  return gl_adaptive(weighted, lo, hi, tol, cfg.max_subdivisions);
}

std::vector<double> segment_edges(double lo, double hi,
                                  const std::vector<double>& candidates) {
  std::vector<double> edges;
  edges.push_back(lo);
  const double eps = 1e-14 * std::max(1.0, std::abs(hi - lo));
  for (double c : candidates) {
    if (c > lo + eps && c < hi - eps) edges.push_back(c);
  }
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [eps](double u, double v) { return std::abs(u - v) <= eps; }),
              edges.end());
  return edges;
}

double rl_integral(const corpus::TestFunction& f, const Interval& interval,
                   FracOrder order, double x, const QuadratureConfig& cfg) {
  validate(cfg);
  const double alpha = order.alpha;
  if (!(x >= interval.a && x <= interval.b)) {
    throw std::domain_error("rl_integral: x must lie in [a, b]");
  }
  if (alpha == 0.0) return f.eval(x);
  if (!(alpha > 0.0)) {
    throw std::domain_error("rl_integral: order must be >= 0, got " +
                            std::to_string(alpha));
  }
  if (x == interval.a) return 0.0;

  const auto edges = segment_edges(interval.a, x, f.breakpoints);
  QuadratureConfig piece_cfg = cfg;
  piece_cfg.target_abs_tol = cfg.target_abs_tol / static_cast<double>(edges.size());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    total += weighted_segment(f.eval, edges[i], edges[i + 1], x, alpha - 1.0, piece_cfg);
  }
  return total / specfun::gamma(alpha);
}

double weighted_integral(const Fn& g, const Interval& interval, FracOrder order,
                         const std::vector<double>& extra_breakpoints,
                         const QuadratureConfig& cfg) {
  validate(cfg);
  const double alpha = order.alpha;
  if (!(alpha >= 1.0)) {
    throw std::domain_error("weighted_integral: requires alpha >= 1, got " +
                            std::to_string(alpha));
  }
  for (double bp : extra_breakpoints) {
    if (!(bp > interval.a && bp < interval.b)) {
      throw std::domain_error("weighted_integral: breakpoints must be interior");
    }
  }
  const auto edges = segment_edges(interval.a, interval.b, extra_breakpoints);
  QuadratureConfig piece_cfg = cfg;
  piece_cfg.target_abs_tol = cfg.target_abs_tol / static_cast<double>(edges.size());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    total += weighted_segment(g, edges[i], edges[i + 1], interval.b, alpha - 1.0,
                              piece_cfg);
  }
  return total;
}

namespace {

struct SimpsonState {
  const Fn& g;
  long evals = 0;
  long max_evals = 4'000'000;
  bool exhausted = false;
  bool non_finite = false;

  double sample(double t) {
    ++evals;
    return g(t);
  }
};

double simpson_rec(SimpsonState& st, double a, double b, double fa, double fm,
                   double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = st.sample(lm);
  const double frm = st.sample(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double refined = left + right;
  if (!std::isfinite(refined)) {
    // Keep the parent's estimate for this cell so the overall best estimate
    // stays meaningful; the top level reports the failure.
    st.non_finite = true;
    return whole;
  }
  const double delta = refined - whole;
  if (std::abs(delta) <= 15.0 * tol) {
    return refined + delta / 15.0;  // Richardson
  }
  if (depth <= 0 || st.evals > st.max_evals) {
    st.exhausted = true;
    return refined + delta / 15.0;
  }
  return simpson_rec(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_oracle(const Fn& g, double a, double b, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("adaptive_oracle: tol must be > 0");
  if (a == b) return 0.0;
  if (a > b) return -adaptive_oracle(g, b, a, tol);
  constexpr int kMaxDepth = 52;
  SimpsonState st{g};
  const double fa = st.sample(a);
  const double fb = st.sample(b);
  const double fm = st.sample(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  if (!std::isfinite(whole)) {
    throw ConvergenceError("adaptive_oracle: non-finite integrand value", 0.0);
  }
  const double result = simpson_rec(st, a, b, fa, fm, fb, whole, tol, kMaxDepth);
  if (st.non_finite) {
    throw ConvergenceError("adaptive_oracle: non-finite integrand value", result);
  }
  if (st.exhausted) {
    throw ConvergenceError("adaptive_oracle: subdivision budget exhausted", result);
  }
  return result;
}

}  // namespace fracver::quad
