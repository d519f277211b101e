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
#ifndef FRACGEN_REFERENCE_TABLES_HPP
#define FRACGEN_REFERENCE_TABLES_HPP

// Published convergence tables for the benchmark problems.

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fracgen {

enum class TableProblem { steady, diffusion };

struct ReferenceCell {
  double max_error;
  std::optional<double> order;
};

struct ReferenceTable {
  int id = 0;
  TableProblem problem = TableProblem::steady;
  std::string scheme;  // "order2" or "order3"
  std::vector<double> alphas;
  std::vector<int> intervals;  // N per row
  std::vector<int> steps;      // M per row, 0 for steady
  // cells[row][alpha index]
  std::vector<std::vector<ReferenceCell>> cells;
  std::string note;
};

/// Tables 3 to 6. Throws UsageError for any other id.
const ReferenceTable& reference_table(int id);
std::span<const int> reference_table_ids();

}  // namespace fracgen

#endif  // FRACGEN_REFERENCE_TABLES_HPP
