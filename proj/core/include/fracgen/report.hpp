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
#ifndef FRACGEN_REPORT_HPP
#define FRACGEN_REPORT_HPP

// Convergence reports and their CSV / JSON encodings.
//
// CSV layout: optional "# key=value" metadata lines, then the header
//   N,M,alpha,scheme,max_error,observed_order
// and one row per resolution. Errors are written in scientific notation with
// five significant digits; orders with four decimals; a missing order is an
// empty field and a failed solve has max_error "nan".

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fracgen {

struct ConvergenceRow {
  int intervals = 0;   // N
  int steps = 0;       // M, 0 for steady problems
  double max_error = 0;
  std::optional<double> observed_order;
  std::string failure;  // empty when the solve succeeded

  bool failed() const { return !failure.empty(); }
  friend bool operator==(const ConvergenceRow&, const ConvergenceRow&) = default;
};

struct ConvergenceReport {
  std::string problem;
  std::string scheme;
  double alpha = 0;
  std::vector<ConvergenceRow> rows;

  friend bool operator==(const ConvergenceReport&, const ConvergenceReport&) = default;
};

/// Fills observed_order: row k gets log(e_{k-1}/e_k) / log(N_k/N_{k-1}),
/// which is log2 of the error ratio under doubling. The first row, and rows
/// next to a failure, get none.
void fill_observed_orders(ConvergenceReport& report);

inline constexpr char kCsvHeader[] = "N,M,alpha,scheme,max_error,observed_order";

std::string format_error(double value);
std::string format_order(double value);

void write_csv(std::ostream& os, const std::vector<ConvergenceReport>& reports);
std::string to_csv(const std::vector<ConvergenceReport>& reports);
/// Inverse of write_csv up to the printed precision. Rows are grouped into
/// reports by consecutive (alpha, scheme).
std::vector<ConvergenceReport> parse_csv(const std::string& text);

/// The report as it reads back from CSV (values rounded to printed precision).
ConvergenceReport rounded_for_csv(const ConvergenceReport& report);

std::string to_json(const std::vector<ConvergenceReport>& reports);

/// Writes via a temporary file and rename.
void write_file_atomically(const std::string& path, const std::string& contents);

}  // namespace fracgen

#endif  // FRACGEN_REPORT_HPP
