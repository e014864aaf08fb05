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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fracver/errors.hpp"
#include "fracver/sweep.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fracver::ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sweep-based numerical verification of fractional Montgomery "
               "identities and Ostrowski-type bounds"};
  app.name("verify");

  std::string config_path, format, out_path, checks, alphas, lambdas, functions;
  std::string interval_a, interval_b, slack_quad, slack_exact, residual_tol;
  int x_grid = -1;
  int jobs = 0;
  bool self_test = false;

  app.add_option("--config", config_path, "Config file (flat key = value grammar)");
  app.add_option("--format", format, "Report format: csv or json");
  app.add_option("--out", out_path, "Report path (default: stdout)");
  app.add_option("--checks", checks, "Comma-separated checks to run");
  app.add_option("--alphas", alphas, "Comma-separated fractional orders (>= 1)");
  app.add_option("--lambdas", lambdas, "Comma-separated lambda values in [0,1]");
  app.add_option("--functions", functions, "Comma-separated catalog functions");
  app.add_option("--x-grid", x_grid, "Number of uniform interior x points");
  app.add_option("--interval-a", interval_a, "Left endpoint");
  app.add_option("--interval-b", interval_b, "Right endpoint");
  app.add_option("--slack-quad", slack_quad, "Slack for quadrature-backed checks");
  app.add_option("--slack-exact", slack_exact, "Slack for exact-oracle-backed checks");
  app.add_option("--residual-tol", residual_tol, "Identity residual tolerance");
  app.add_option("--jobs", jobs, "Worker threads (report is identical for any count)");
  app.add_flag("--self-test", self_test, "Run only the quadrature-vs-oracle suite");

  CLI11_PARSE(app, argc, argv);

  try {
    // Flags override the file: append them after the file contents so the
    // last assignment wins in the parser.
    std::string text = config_path.empty() ? std::string{} : read_file(config_path);
    auto override_key = [&text](const std::string& key, const std::string& value) {
      if (!value.empty()) text += "\n" + key + " = " + value;
    };
    override_key("format", format);
    override_key("out", out_path);
    override_key("checks", self_test ? "quad_selftest" : checks);
    override_key("alphas", alphas);
    override_key("lambdas", lambdas);
    override_key("functions", functions);
    override_key("interval_a", interval_a);
    override_key("interval_b", interval_b);
    override_key("slack_quad", slack_quad);
    override_key("slack_exact", slack_exact);
    override_key("residual_tol", residual_tol);
    if (x_grid >= 0) override_key("x_grid", std::to_string(x_grid));
    if (jobs > 0) override_key("jobs", std::to_string(jobs));

    const fracver::sweep::SweepConfig cfg = fracver::sweep::parse_config(text);
    const fracver::sweep::SweepReport report = fracver::sweep::run_sweep(cfg);
    const std::string rendered = cfg.output_format == "json"
                                     ? fracver::sweep::render_json(cfg, report)
                                     : fracver::sweep::render_csv(report);

    if (cfg.output_path.empty()) {
      std::cout << rendered;
      std::cerr << fracver::sweep::render_summary(report);
    } else {
      std::ofstream out(cfg.output_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write to '" << cfg.output_path << "'\n";
        return 2;
      }
      out << rendered;
      std::cout << fracver::sweep::render_summary(report);
    }
    return report.ok ? 0 : 1;
  } catch (const fracver::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
