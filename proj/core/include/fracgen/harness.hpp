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
#ifndef FRACGEN_HARNESS_HPP
#define FRACGEN_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fracgen/reference_tables.hpp"
#include "fracgen/report.hpp"
#include "fracgen/steady.hpp"

namespace fracgen {

enum class StepRule { fixed, equal, three_halves };

std::string to_string(StepRule rule);
StepRule parse_step_rule(const std::string& text);

/// ceil(N^{3/2}) computed in integers.
int three_halves_steps(int intervals);

struct RunConfig {
  TableProblem problem = TableProblem::steady;
  Scheme scheme = Scheme::order2;
  std::vector<double> alphas = {1.5};
  std::vector<int> intervals = {16, 32, 64, 128};
  StepRule step_rule = StepRule::equal;
  int fixed_steps = 0;  // used by StepRule::fixed
  std::string output;   // empty: no file
  bool json = false;
  std::uint64_t seed = 2017;
  int threads = 0;  // 0: hardware concurrency

  int steps_for(int intervals) const;
  /// Non-empty lists, N >= 16, alpha in (1, 2], fixed rule needs fixed_steps >= 1.
  void validate() const;
};

std::string to_string(TableProblem problem);
TableProblem parse_problem(const std::string& text);

/// Key-value config: one "key = value" per line, '#' starts a comment.
/// Keys: problem, scheme, alpha, N, M_rule, M, output, format, seed, threads.
/// Lists are comma separated. Unknown keys are a UsageError.
RunConfig parse_run_config(const std::string& text, RunConfig base = {});
RunConfig load_run_config(const std::string& path, RunConfig base = {});

/// Environment variable naming the directory for relative output paths.
inline constexpr char kOutputDirEnv[] = "FRACGEN_OUTPUT_DIR";
std::string resolve_output_path(const std::string& path);

/// One report for a single alpha.
ConvergenceReport run_convergence(const RunConfig& config, double alpha);
/// One report per alpha, computed in parallel, returned in config order.
std::vector<ConvergenceReport> run_convergence(const RunConfig& config);

inline constexpr double kTableErrorTolerance = 0.02;
inline constexpr double kTableOrderTolerance = 0.1;
inline constexpr double kTableLooseOrderTolerance = 0.3;

struct TableCellDiff {
  int intervals = 0;
  int steps = 0;
  double alpha = 0;
  double published_error = 0;
  double computed_error = 0;
  double relative_error_diff = 0;
  bool error_ok = false;
  std::optional<double> published_order;
  std::optional<double> computed_order;
  double order_tolerance = 0;
  bool order_ok = true;
  std::string failure;

  bool passed() const { return error_ok && order_ok; }
};

struct TableDiff {
  int id = 0;
  std::string note;
  std::vector<TableCellDiff> cells;  // row-major over (N, alpha)
  std::vector<ConvergenceReport> reports;

  bool passed() const;
  /// Cells restricted to one alpha column.
  std::vector<TableCellDiff> column(double alpha) const;
};

struct ReproduceOptions {
  int max_intervals = 0;  // 0: all published rows
  int threads = 0;
};

TableDiff reproduce_table(int id, const ReproduceOptions& options = {});

void write_table_diff_csv(std::ostream& os, const TableDiff& diff);
std::string table_diff_csv(const TableDiff& diff);

}  // namespace fracgen

#endif  // FRACGEN_HARNESS_HPP
