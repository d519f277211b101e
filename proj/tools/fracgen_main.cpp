// Copyright 2026 The fracgen Authors
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
// fracgen: command-line front end for the generator, solver and harness
// modules. Exit status: 0 all checks pass, 1 a check failed, 2 usage error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fracgen/diffusion.hpp"
#include "fracgen/errors.hpp"
#include "fracgen/generators.hpp"
#include "fracgen/harness.hpp"
#include "fracgen/properties.hpp"
#include "fracgen/report.hpp"
#include "fracgen/steady.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GeneratorArgs {
  int order = 2;
  std::string shift = "1";
  std::string alpha = "1.5";
  bool lubich = false;
};

void add_generator_options(CLI::App* cmd, GeneratorArgs& g) {
  cmd->add_option("-p,--order", g.order, "generator order (1..6)")->capture_default_str();
  cmd->add_option("-r,--shift", g.shift, "shift, decimal or a/b")->capture_default_str();
  cmd->add_option("-a,--alpha", g.alpha, "fractional order, decimal or a/b")
      ->capture_default_str();
  cmd->add_flag("--lubich", g.lubich, "use the unshifted Lubich coefficients with the given shift");
}

template <typename T>
fracgen::BasicGenerator<T> make_generator(const GeneratorArgs& args) {
  const fracgen::Rational alpha_q = fracgen::parse_rational(args.alpha);
  const fracgen::Rational shift_q = fracgen::parse_rational(args.shift);
  T alpha, shift;
  if constexpr (fracgen::is_exact_v<T>) {
    alpha = alpha_q;
    shift = shift_q;
  } else {
    alpha = fracgen::to_double(alpha_q);
    shift = fracgen::to_double(shift_q);
  }
  if (args.lubich) return fracgen::with_shift(fracgen::lubich_generator<T>(args.order, alpha), shift);
  return fracgen::beta_table<T>(args.order, shift, alpha);
}

int cmd_verify_order(const GeneratorArgs& args, bool floating, std::optional<int> expect) {
  const int expected = expect.value_or(args.order);
  fracgen::OrderReport report;
  std::vector<std::string> beta;
  if (floating) {
    const auto g = make_generator<double>(args);
    for (double b : g.beta) beta.push_back(std::to_string(b));
    report = fracgen::verify_order(g, expected);
  } else {
    const auto g = make_generator<fracgen::Rational>(args);
    for (const auto& b : g.beta) beta.push_back(fracgen::to_string(b));
    report = fracgen::verify_order(g, expected);
  }
  std::cout << "beta:";
  for (const auto& b : beta) std::cout << ' ' << b;
  std::cout << "\nmode: " << (report.exact ? "exact" : "floating") << "\n";
  std::cout << "expected order: " << report.expected_order << "\n";
  std::cout << "observed order: " << report.observed_order << "\n";
  std::printf("leading coefficient: %.12g\n", report.leading_coeff);
  for (std::size_t l = 0; l < report.coefficients.size(); ++l) {
    std::printf("a_%zu = %.12g\n", l, report.coefficients[l]);
  }
  std::cout << (report.passed() ? "PASS" : "FAIL") << "\n";
  return report.passed() ? kExitPass : kExitFail;
}

int cmd_weights(const GeneratorArgs& args, int count) {
  const auto w = fracgen::grunwald_weights(make_generator<double>(args), count);
  std::cout << "k,w_k\n";
  for (std::size_t k = 0; k < w.size(); ++k) std::printf("%zu,%.17g\n", k, w[k]);
  return kExitPass;
}

struct RunArgs {
  std::string config;
  std::vector<double> alphas;
  std::vector<int> intervals;
  std::string scheme;
  std::string step_rule;
  std::optional<int> steps;
  std::string output;
  bool json = false;
  std::optional<int> threads;
};

void add_run_options(CLI::App* cmd, RunArgs& a, bool diffusion) {
  cmd->add_option("-c,--config", a.config, "key-value config file (flags override it)");
  cmd->add_option("-a,--alpha", a.alphas, "fractional orders")->delimiter(',');
  cmd->add_option("-N,--intervals", a.intervals, "spatial interval counts")->delimiter(',');
  cmd->add_option("-s,--scheme", a.scheme, "order2 or order3");
  if (diffusion) {
    cmd->add_option("--M-rule", a.step_rule, "time step rule: equal, pow1.5 or fixed");
    cmd->add_option("-M,--steps", a.steps, "time steps for the fixed rule");
  }
  cmd->add_option("-o,--output", a.output, "write the report to this file");
  cmd->add_flag("--json", a.json, "emit JSON instead of CSV");
  cmd->add_option("-j,--threads", a.threads, "worker threads (0: all cores)");
}

int cmd_run(const RunArgs& a, fracgen::TableProblem problem) {
  fracgen::RunConfig cfg;
  cfg.problem = problem;
  if (!a.config.empty()) cfg = fracgen::load_run_config(a.config, cfg);
  cfg.problem = problem;
  if (!a.alphas.empty()) cfg.alphas = a.alphas;
  if (!a.intervals.empty()) cfg.intervals = a.intervals;
  if (!a.scheme.empty()) cfg.scheme = fracgen::parse_scheme(a.scheme);
  if (!a.step_rule.empty()) cfg.step_rule = fracgen::parse_step_rule(a.step_rule);
  if (a.steps) {
    cfg.fixed_steps = *a.steps;
    if (a.step_rule.empty()) cfg.step_rule = fracgen::StepRule::fixed;
  }
  if (!a.output.empty()) cfg.output = a.output;
  if (a.json) cfg.json = true;
  if (a.threads) cfg.threads = *a.threads;
  cfg.validate();

  const auto reports = fracgen::run_convergence(cfg);
  const std::string text = cfg.json ? fracgen::to_json(reports) + "\n" : fracgen::to_csv(reports);
  std::cout << text;
  if (!cfg.output.empty()) {
    const auto path = fracgen::resolve_output_path(cfg.output);
    fracgen::write_file_atomically(path, text);
    std::cerr << "wrote " << path << "\n";
  }
  bool ok = true;
  for (const auto& r : reports) {
    for (const auto& row : r.rows) {
      if (row.failed()) {
        ok = false;
        std::cerr << "alpha=" << r.alpha << " N=" << row.intervals << ": " << row.failure << "\n";
      }
    }
  }
  return ok ? kExitPass : kExitFail;
}

struct ScanArgs {
  int order = 3;
  int shift = 1;
  double alpha_min = 1.0;
  double alpha_max = 2.0;
  int points = 50;
  int intervals = 64;
  std::uint64_t seed = 2017;
  bool require_stable = false;
};

int cmd_scan(const ScanArgs& s) {
  if (s.points < 2) throw fracgen::UsageError("--points must be at least 2");
  std::vector<double> grid;
  for (int i = 0; i < s.points; ++i) {
    grid.push_back(s.alpha_min + (s.alpha_max - s.alpha_min) * i / (s.points - 1));
  }
  const auto report =
      fracgen::stability_scan(s.order, s.shift, grid, fracgen::GridSpec(0.0, 1.0, s.intervals), s.seed);
  std::cout << "alpha,max_rayleigh,solve_checked,max_error,baseline_error,stable,note\n";
  for (const auto& p : report.points) {
    std::printf("%.6g,%.6e,%d,%s,%s,%d,%s\n", p.alpha, p.max_rayleigh, p.solve_checked ? 1 : 0,
                p.solve_ok ? fracgen::format_error(p.max_error).c_str() : "",
                p.solve_checked ? fracgen::format_error(p.baseline_error).c_str() : "",
                p.stable ? 1 : 0, p.note.c_str());
  }
  const auto from = report.stable_from();
  std::cerr << "p=" << s.order << " r=" << s.shift << ": "
            << (report.all_stable() ? std::string("stable on the whole grid")
                : from ? "stable from alpha=" + std::to_string(*from)
                       : std::string("unstable at the top of the grid"))
            << "\n";
  return (!s.require_stable || report.all_stable()) ? kExitPass : kExitFail;
}

int cmd_reproduce(int table, int max_n, const std::string& output, std::optional<int> threads) {
  fracgen::ReproduceOptions opts;
  opts.max_intervals = max_n;
  opts.threads = threads.value_or(0);
  const auto diff = fracgen::reproduce_table(table, opts);
  const std::string text = fracgen::table_diff_csv(diff);
  std::cout << text;
  if (!output.empty()) {
    const auto path = fracgen::resolve_output_path(output);
    fracgen::write_file_atomically(path, text);
    std::cerr << "wrote " << path << "\n";
  }
  std::cerr << "table " << table << ": " << (diff.passed() ? "PASS" : "FAIL") << "\n";
  return diff.passed() ? kExitPass : kExitFail;
}

int cmd_properties(std::uint64_t seed, bool negate) {
  fracgen::PropertyOptions opts;
  opts.negate_first_weight = negate;
  const auto report = fracgen::run_property_suite(seed, opts);
  fracgen::print_suite(std::cout, report);
  return report.all_passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional generator construction, solvers and convergence harness"};
  app.require_subcommand(1);

  GeneratorArgs verify_gen;
  bool floating = false;
  std::optional<int> expect;
  auto* verify = app.add_subcommand("verify-order", "expand G_r(z) and report the order");
  add_generator_options(verify, verify_gen);
  verify->add_flag("--float", floating, "use floating arithmetic instead of exact rationals");
  verify->add_option("--expect", expect, "order to check against (default: --order)");

  GeneratorArgs weight_gen;
  int count = 20;
  auto* weights = app.add_subcommand("weights", "print Grunwald-type weights w_0..w_K");
  add_generator_options(weights, weight_gen);
  weights->add_option("-K,--count", count, "largest weight index")->capture_default_str();

  RunArgs steady_args;
  auto* steady = app.add_subcommand("steady", "steady convergence study");
  add_run_options(steady, steady_args, false);

  RunArgs diffusion_args;
  auto* diffusion = app.add_subcommand("diffusion", "Crank-Nicolson convergence study");
  add_run_options(diffusion, diffusion_args, true);

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "stability scan over alpha");
  scan->add_option("-p,--order", scan_args.order)->capture_default_str();
  scan->add_option("-r,--shift", scan_args.shift)->capture_default_str();
  scan->add_option("--alpha-min", scan_args.alpha_min)->capture_default_str();
  scan->add_option("--alpha-max", scan_args.alpha_max)->capture_default_str();
  scan->add_option("--points", scan_args.points)->capture_default_str();
  scan->add_option("-N,--intervals", scan_args.intervals)->capture_default_str();
  scan->add_option("--seed", scan_args.seed)->capture_default_str();
  scan->add_flag("--require-stable", scan_args.require_stable, "exit 1 if any point is unstable");

  int table = 3;
  int max_n = 0;
  std::string table_output;
  std::optional<int> table_threads;
  auto* reproduce = app.add_subcommand("reproduce-table", "rerun a published table and diff it");
  reproduce->add_option("-t,--table", table, "table id: 3, 4, 5 or 6")
      ->check(CLI::IsMember({3, 4, 5, 6}))
      ->capture_default_str();
  reproduce->add_option("--max-N", max_n, "only rows with N up to this value");
  reproduce->add_option("-o,--output", table_output, "write the diff CSV to this file");
  reproduce->add_option("-j,--threads", table_threads, "worker threads (0: all cores)");

  std::uint64_t seed = fracgen::kDefaultPropertySeed;
  bool negate = false;
  auto* properties = app.add_subcommand("properties", "run the property suite");
  properties->add_option("--seed", seed)->capture_default_str();
  properties->add_flag("--negate-first-weight", negate, "mutation check: corrupt w_1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify_order(verify_gen, floating, expect);
    if (*weights) return cmd_weights(weight_gen, count);
    if (*steady) return cmd_run(steady_args, fracgen::TableProblem::steady);
    if (*diffusion) return cmd_run(diffusion_args, fracgen::TableProblem::diffusion);
    if (*scan) return cmd_scan(scan_args);
    if (*reproduce) return cmd_reproduce(table, max_n, table_output, table_threads);
    if (*properties) return cmd_properties(seed, negate);
  } catch (const fracgen::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fracgen::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
