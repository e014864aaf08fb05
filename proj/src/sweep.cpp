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

#include "fracver/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "fracver/bounds.hpp"
#include "fracver/errors.hpp"
#include "fracver/identities.hpp"
#include "fracver/kernels.hpp"
#include "fracver/oracle.hpp"
#include "fracver/quad.hpp"

namespace fracver::sweep {

namespace {

constexpr double kSelftestTol = 1e-12;   // rl vs exact-oracle disagreement
constexpr double kMomentTol = 1e-10;     // closed-form moments vs quadrature
constexpr double kLedgerThreshold = 1e-10;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Comma split that respects parentheses, so "abs_shift(0.5), exp" works.
std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(trim(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  const std::string tail = trim(current);
  if (!tail.empty()) out.push_back(tail);
  out.erase(std::remove(out.begin(), out.end(), std::string{}), out.end());
  return out;
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return d;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': expected a number, got '" + v + "'");
  }
}

int parse_int(const std::string& key, const std::string& v) {
  const double d = parse_double(key, v);
  if (d != std::floor(d)) {
    throw ConfigError("config key '" + key + "': expected an integer, got '" + v + "'");
  }
  return static_cast<int>(d);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string sanitize_reason(std::string reason) {
  for (char& ch : reason) {
    if (ch == ',' || ch == '\n' || ch == '\r') ch = ';';
  }
  return reason;
}

struct Task {
  Check check;
  std::string function;  // "moments" for the moment self-test family
  double alpha = 1.0;
  double lambda = 0.0;
  double x = 0.0;
};

struct TaskResult {
  std::vector<Row> rows;
  std::vector<TypoLedgerEntry> ledger;
};

Row base_row(const Task& t, const std::string& check_name) {
  Row r;
  r.check = check_name;
  r.function = t.function;
  r.alpha = t.alpha;
  r.lambda = t.lambda;
  r.x = t.x;
  return r;
}

Row from_bound(const Task& t, const bounds::BoundReport& br) {
  Row r = base_row(t, br.variant);
  r.lhs = br.lhs;
  r.rhs = br.rhs;
  r.margin = br.margin;
  r.holds = br.holds;
  r.provenance = identities::to_string(br.provenance);
  return r;
}

// Quadrature check of the four closed-form kernel moments at one grid point.
double worst_moment_disagreement(const Interval& iv, FracOrder order, double lambda,
                                 double x, const QuadratureConfig& qcfg) {
  const double a = iv.a;
  const double b = iv.b;
  const double alpha = order.alpha;
  const double c1 = a + lambda * (b - a);
  const double c2 = b - lambda * (b - a);
  auto seg = [&](const quad::Fn& g, double lo, double hi, double exponent) {
    return quad::weighted_segment(g, lo, hi, b, exponent, qcfg);
  };
  double worst = 0.0;
  auto record = [&](double closed, double numeric) {
    worst = std::max(worst, std::abs(closed - numeric));
  };
  record(kernels::moment_left(x, iv, order),
         seg([a](double t) { return t - a; }, a, x, alpha - 1.0));
  record(kernels::moment_right(x, iv, order), seg([](double) { return 1.0; }, x, b, alpha));
  {
    const double split = std::clamp(c1, a, x);
    const double numeric = seg([c1](double t) { return c1 - t; }, a, split, alpha - 1.0) +
                           seg([c1](double t) { return t - c1; }, split, x, alpha - 1.0);
    record(kernels::j3_moment(x, iv, order, lambda), numeric);
  }
  {
    const double split = std::clamp(c2, x, b);
    const double numeric = seg([c2](double t) { return c2 - t; }, x, split, alpha - 1.0) +
                           seg([c2](double t) { return t - c2; }, split, b, alpha - 1.0);
    record(kernels::j4_moment(x, iv, order, lambda), numeric);
  }
  return worst;
}

struct Engine {
  const SweepConfig& cfg;
  QuadratureConfig qcfg;
  bounds::Slack slack;
  std::map<std::string, corpus::TestFunction> functions;

  explicit Engine(const SweepConfig& c) : cfg(c) {
    slack.quadrature = c.slack_quad;
    slack.exact = c.slack_exact;
    for (const auto& name : c.functions) {
      corpus::TestFunction f = corpus::builtin(name, c.interval);
      functions.emplace(name, std::move(f));
    }
  }

  const corpus::TestFunction& fn(const std::string& name) const {
    return functions.at(name);
  }

  TaskResult run(const Task& t) const {
    TaskResult out;
    switch (t.check) {
      case Check::identity: {
        Row r = base_row(t, "identity");
        const auto tb = identities::montgomery_terms(fn(t.function), cfg.interval,
                                                     FracOrder{t.alpha}, t.x, qcfg);
        r.residual = tb.residual();
        r.holds = std::abs(*r.residual) <= cfg.residual_tol;
        r.provenance = identities::to_string(tb.provenance);
        out.rows.push_back(std::move(r));
        break;
      }
      case Check::identity_lambda: {
        Row r = base_row(t, "identity_lambda");
        const auto tb = identities::generalized_terms(
            fn(t.function), cfg.interval, FracOrder{t.alpha}, t.x, t.lambda, qcfg);
        r.residual = tb.residual();
        r.holds = std::abs(*r.residual) <= cfg.residual_tol;
        r.provenance = identities::to_string(tb.provenance);
        out.rows.push_back(std::move(r));
        break;
      }
      case Check::thm1:
        out.rows.push_back(from_bound(
            t, bounds::thm1_check(fn(t.function), cfg.interval, FracOrder{t.alpha},
                                  t.x, qcfg, slack)));
        break;
      case Check::thm2:
        out.rows.push_back(from_bound(
            t, bounds::thm2_check(fn(t.function), cfg.interval, FracOrder{t.alpha},
                                  t.x, qcfg, slack)));
        break;
      case Check::thm3: {
        const auto [exact, printed] =
            bounds::thm3_check(fn(t.function), cfg.interval, FracOrder{t.alpha}, t.x,
                               t.lambda, qcfg, slack);
        out.rows.push_back(from_bound(t, exact));
        out.rows.push_back(from_bound(t, printed));
        const double delta = printed.rhs - exact.rhs;
        if (std::abs(delta) > kLedgerThreshold * std::max(1.0, std::abs(exact.rhs))) {
          out.ledger.push_back(TypoLedgerEntry{t.function, t.alpha, t.lambda, t.x,
                                               printed.rhs, exact.rhs, delta});
        }
        break;
      }
      case Check::midpoint: {
        const auto [first, second] = bounds::midpoint_chain(fn(t.function), cfg.interval, slack);
        out.rows.push_back(from_bound(t, first));
        out.rows.push_back(from_bound(t, second));
        break;
      }
      case Check::quad_selftest: {
        Row r = base_row(t, "quad_selftest");
        if (t.function == "moments") {
          r.residual = worst_moment_disagreement(cfg.interval, FracOrder{t.alpha},
                                                 t.lambda, t.x, qcfg);
          r.holds = *r.residual <= kMomentTol;
        } else {
          r.residual = oracle::cross_validate(fn(t.function), cfg.interval,
                                              FracOrder{t.alpha}, t.x, qcfg);
          r.holds = *r.residual <= kSelftestTol;
        }
        r.provenance = "quadrature";
        out.rows.push_back(std::move(r));
        break;
      }
    }
    return out;
  }
};

const char* primary_row_name(Check c) {
  switch (c) {
    case Check::identity: return "identity";
    case Check::identity_lambda: return "identity_lambda";
    case Check::thm1: return "thm1";
    case Check::thm2: return "thm2";
    case Check::thm3: return "thm3_exact";
    case Check::midpoint: return "midpoint1";
    case Check::quad_selftest: return "quad_selftest";
  }
  return "?";
}

std::vector<Task> build_tasks(const SweepConfig& cfg, const Engine& engine) {
  std::vector<Task> tasks;
  const auto xs = cfg.x_points();
  for (Check check : cfg.checks) {
    switch (check) {
      case Check::identity:
      case Check::thm1:
      case Check::thm2:
        for (const auto& name : cfg.functions)
          for (double alpha : cfg.alphas)
            for (double x : xs) tasks.push_back(Task{check, name, alpha, 0.0, x});
        break;
      case Check::identity_lambda:
      case Check::thm3:
        for (const auto& name : cfg.functions)
          for (double alpha : cfg.alphas)
            for (double lambda : cfg.lambdas)
              for (double x : xs) tasks.push_back(Task{check, name, alpha, lambda, x});
        break;
      case Check::midpoint:
        for (const auto& name : cfg.functions)
          tasks.push_back(
              Task{check, name, 1.0, 0.0, cfg.interval.midpoint()});
        break;
      case Check::quad_selftest: {
        for (const auto& name : cfg.functions) {
          if (!engine.fn(name).poly_form) continue;
          for (double alpha : cfg.alphas)
            for (double x : xs) tasks.push_back(Task{check, name, alpha, 0.0, x});
        }
        for (double alpha : cfg.alphas)
          for (double lambda : cfg.lambdas)
            for (double x : xs)
              tasks.push_back(Task{check, "moments", alpha, lambda, x});
        break;
      }
    }
  }
  return tasks;
}

}  // namespace

const char* to_string(Check c) {
  switch (c) {
    case Check::identity: return "identity";
    case Check::identity_lambda: return "identity_lambda";
    case Check::thm1: return "thm1";
    case Check::thm2: return "thm2";
    case Check::thm3: return "thm3";
    case Check::midpoint: return "midpoint";
    case Check::quad_selftest: return "quad_selftest";
  }
  return "?";
}

Check check_from_string(const std::string& name) {
  for (Check c : all_checks()) {
    if (name == to_string(c)) return c;
  }
  throw ConfigError("config key 'checks': unknown check '" + name + "'");
}

std::vector<Check> all_checks() {
  return {Check::identity, Check::identity_lambda, Check::thm1, Check::thm2,
          Check::thm3, Check::midpoint, Check::quad_selftest};
}

std::vector<double> SweepConfig::x_points() const {
  std::vector<double> xs;
  const double h = interval.width() / (x_grid + 1);
  for (int i = 1; i <= x_grid; ++i) xs.push_back(interval.a + i * h);
  return xs;
}

SweepConfig parse_config(const std::string& text) {
  SweepConfig cfg;
  cfg.functions = corpus::default_function_set();
  cfg.checks = all_checks();
  double interval_a = 0.0, interval_b = 1.0;

  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "interval_a") {
      interval_a = parse_double(key, value);
    } else if (key == "interval_b") {
      interval_b = parse_double(key, value);
    } else if (key == "alphas") {
      cfg.alphas.clear();
      for (const auto& item : split_list(value)) {
        const double a = parse_double(key, item);
        if (!(a >= 1.0)) {
          throw ConfigError("config key 'alphas': all orders must satisfy alpha >= 1, got " + item);
        }
        cfg.alphas.push_back(a);
      }
      if (cfg.alphas.empty()) throw ConfigError("config key 'alphas': list is empty");
    } else if (key == "lambdas") {
      cfg.lambdas.clear();
      for (const auto& item : split_list(value)) {
        const double l = parse_double(key, item);
        if (!(l >= 0.0 && l <= 1.0)) {
          throw ConfigError("config key 'lambdas': values must lie in [0, 1], got " + item);
        }
        cfg.lambdas.push_back(l);
      }
      if (cfg.lambdas.empty()) throw ConfigError("config key 'lambdas': list is empty");
    } else if (key == "x_grid") {
      cfg.x_grid = parse_int(key, value);
      if (cfg.x_grid < 1) throw ConfigError("config key 'x_grid': must be >= 1");
    } else if (key == "functions") {
      cfg.functions = split_list(value);
      if (cfg.functions.empty()) {
        throw ConfigError("config key 'functions': list is empty");
      }
    } else if (key == "checks") {
      cfg.checks.clear();
      for (const auto& item : split_list(value)) cfg.checks.push_back(check_from_string(item));
      if (cfg.checks.empty()) throw ConfigError("config key 'checks': list is empty");
    } else if (key == "slack_quad") {
      cfg.slack_quad = parse_double(key, value);
      if (!(cfg.slack_quad > 0.0)) throw ConfigError("config key 'slack_quad': must be > 0");
    } else if (key == "slack_exact") {
      cfg.slack_exact = parse_double(key, value);
      if (!(cfg.slack_exact > 0.0)) throw ConfigError("config key 'slack_exact': must be > 0");
    } else if (key == "residual_tol") {
      cfg.residual_tol = parse_double(key, value);
      if (!(cfg.residual_tol > 0.0)) throw ConfigError("config key 'residual_tol': must be > 0");
    } else if (key == "format") {
      if (value != "csv" && value != "json") {
        throw ConfigError("config key 'format': expected csv or json, got '" + value + "'");
      }
      cfg.output_format = value;
    } else if (key == "out") {
      cfg.output_path = value;
    } else if (key == "jobs") {
      cfg.jobs = parse_int(key, value);
      if (cfg.jobs < 1) throw ConfigError("config key 'jobs': must be >= 1");
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  if (!(interval_a < interval_b)) {
    throw ConfigError("config key 'interval_a'/'interval_b': requires a < b");
  }
  cfg.interval = Interval(interval_a, interval_b);
  // Surface bad catalog names as configuration errors up front.
  for (const auto& name : cfg.functions) {
    try {
      corpus::builtin(name, cfg.interval);
    } catch (const std::exception& e) {
      throw ConfigError("config key 'functions': " + std::string(e.what()));
    }
  }
  return cfg;
}

SweepReport run_sweep(const SweepConfig& cfg) {
  const Engine engine(cfg);
  const std::vector<Task> tasks = build_tasks(cfg, engine);
  std::vector<TaskResult> results(tasks.size());

  auto execute = [&](std::size_t i) {
    try {
      results[i] = engine.run(tasks[i]);
    } catch (const std::exception& e) {
      Row r = base_row(tasks[i], primary_row_name(tasks[i].check));
      r.holds = false;
      r.error = e.what();
      r.provenance = "error:" + sanitize_reason(e.what());
      results[i] = TaskResult{{std::move(r)}, {}};
    }
  };

  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1 || tasks.size() < 2) {
    for (std::size_t i = 0; i < tasks.size(); ++i) execute(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size();
             i = next.fetch_add(1)) {
          execute(i);
        }
      });
    }
    for (auto& th : workers) th.join();
  }

  SweepReport report;
  for (auto& res : results) {
    for (auto& row : res.rows) report.rows.push_back(std::move(row));
    for (auto& entry : res.ledger) report.typo_ledger.push_back(std::move(entry));
  }
  auto row_key = [](const Row& r) {
    return std::tie(r.check, r.function, r.alpha, r.lambda, r.x);
  };
  std::sort(report.rows.begin(), report.rows.end(),
            [&](const Row& u, const Row& v) { return row_key(u) < row_key(v); });
  std::sort(report.typo_ledger.begin(), report.typo_ledger.end(),
            [](const TypoLedgerEntry& u, const TypoLedgerEntry& v) {
              return std::tie(u.function, u.alpha, u.lambda, u.x) <
                     std::tie(v.function, v.alpha, v.lambda, v.x);
            });

  report.ok = true;
  for (const Row& r : report.rows) {
    auto& s = report.summary[r.check];
    if (r.holds) {
      ++s.pass;
    } else {
      ++s.fail;
    }
    if (r.margin) {
      s.worst_margin = s.worst_margin ? std::min(*s.worst_margin, *r.margin) : *r.margin;
    }
    if (r.residual) {
      const double abs_res = std::abs(*r.residual);
      s.worst_abs_residual =
          s.worst_abs_residual ? std::max(*s.worst_abs_residual, abs_res) : abs_res;
    }
    if (r.error) {
      report.ok = false;
    } else if (r.check != "thm3_printed" && !r.holds) {
      // thm3_printed rows are informational: they document the printed
      // formula's divergence, not a verification failure.
      report.ok = false;
    }
  }
  return report;
}

std::string render_csv(const SweepReport& report) {
  std::string out = "check,function,alpha,lambda,x,lhs,rhs,margin,residual,holds,provenance\n";
  auto cell = [](const std::optional<double>& v) {
    return v ? format_double(*v) : std::string{};
  };
  for (const Row& r : report.rows) {
    out += r.check;
    out += ',';
    out += r.function;
    out += ',';
    out += format_double(r.alpha);
    out += ',';
    out += format_double(r.lambda);
    out += ',';
    out += format_double(r.x);
    out += ',';
    out += cell(r.lhs);
    out += ',';
    out += cell(r.rhs);
    out += ',';
    out += cell(r.margin);
    out += ',';
    out += cell(r.residual);
    out += ',';
    out += r.holds ? "true" : "false";
    out += ',';
    out += r.provenance;
    out += '\n';
  }
  return out;
}

std::string render_json(const SweepConfig& cfg, const SweepReport& report) {
  nlohmann::json doc;
  doc["config"] = {
      {"interval", {cfg.interval.a, cfg.interval.b}},
      {"alphas", cfg.alphas},
      {"lambdas", cfg.lambdas},
      {"x_grid", cfg.x_grid},
      {"functions", cfg.functions},
      {"slack_quad", cfg.slack_quad},
      {"slack_exact", cfg.slack_exact},
      {"residual_tol", cfg.residual_tol},
  };
  {
    std::vector<std::string> names;
    for (Check c : cfg.checks) names.emplace_back(to_string(c));
    doc["config"]["checks"] = names;
  }
  doc["rows"] = nlohmann::json::array();
  for (const Row& r : report.rows) {
    nlohmann::json row = {
        {"check", r.check},   {"function", r.function}, {"alpha", r.alpha},
        {"lambda", r.lambda}, {"x", r.x},               {"holds", r.holds},
        {"provenance", r.provenance},
    };
    if (r.lhs) row["lhs"] = *r.lhs;
    if (r.rhs) row["rhs"] = *r.rhs;
    if (r.margin) row["margin"] = *r.margin;
    if (r.residual) row["residual"] = *r.residual;
    if (r.error) row["error"] = *r.error;
    doc["rows"].push_back(std::move(row));
  }
  doc["summary"] = nlohmann::json::object();
  for (const auto& [check, s] : report.summary) {
    nlohmann::json entry = {{"pass", s.pass}, {"fail", s.fail}};
    if (s.worst_margin) entry["worst_margin"] = *s.worst_margin;
    if (s.worst_abs_residual) entry["worst_abs_residual"] = *s.worst_abs_residual;
    doc["summary"][check] = std::move(entry);
  }
  doc["summary"]["ok"] = report.ok;
  doc["typo_ledger"] = nlohmann::json::array();
  for (const auto& e : report.typo_ledger) {
    doc["typo_ledger"].push_back({{"function", e.function},
                                  {"alpha", e.alpha},
                                  {"lambda", e.lambda},
                                  {"x", e.x},
                                  {"printed_rhs", e.printed_rhs},
                                  {"exact_rhs", e.exact_rhs},
                                  {"delta", e.delta}});
  }
  return doc.dump(2) + "\n";
}

std::string render_summary(const SweepReport& report) {
  std::ostringstream out;
  for (const auto& [check, s] : report.summary) {
    out << check << ": " << s.pass << " pass, " << s.fail << " fail";
    if (s.worst_margin) out << ", worst margin " << format_double(*s.worst_margin);
    if (s.worst_abs_residual) {
      out << ", worst |residual| " << format_double(*s.worst_abs_residual);
    }
    if (check == "thm3_printed") out << " (informational)";
    out << '\n';
  }
  out << "typo_ledger entries: " << report.typo_ledger.size() << '\n';
  out << "overall: " << (report.ok ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace fracver::sweep
