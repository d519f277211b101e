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
#include "fracgen/reference_tables.hpp"

#include <array>

#include "fracgen/errors.hpp"

namespace fracgen {
namespace {

using Cells = std::vector<std::vector<ReferenceCell>>;
constexpr std::nullopt_t kNone = std::nullopt;

ReferenceTable make_table3() {
  ReferenceTable t;
  t.id = 3;
  t.problem = TableProblem::steady;
  t.scheme = "order2";
  t.alphas = {1.1, 1.5, 1.9};
  t.intervals = {16, 32, 64, 128, 256, 512, 1024};
  t.steps = std::vector<int>(t.intervals.size(), 0);
  t.cells = Cells{
      {{4.8893e-01, kNone}, {2.5141e-01, kNone}, {1.3365e-01, kNone}},
      {{1.1592e-01, 2.08}, {6.4851e-02, 1.95}, {3.3951e-02, 1.98}},
      {{2.7227e-02, 2.09}, {1.6450e-02, 1.98}, {8.5491e-03, 1.99}},
      {{6.3685e-03, 2.10}, {4.1396e-03, 1.99}, {2.1446e-03, 2.00}},
      {{1.4873e-03, 2.10}, {1.0383e-03, 2.00}, {5.3703e-04, 2.00}},
      {{3.5020e-04, 2.09}, {2.5997e-04, 2.00}, {1.3437e-04, 2.00}},
      {{8.7574e-05, 2.00}, {6.5044e-05, 2.00}, {3.3606e-05, 2.00}},
  };
  return t;
}

ReferenceTable make_table4() {
  ReferenceTable t;
  t.id = 4;
  t.problem = TableProblem::steady;
  t.scheme = "order3";
  t.alphas = {1.1, 1.5, 1.9};
  t.intervals = {16, 32, 64, 128, 256, 512, 1024};
  t.steps = std::vector<int>(t.intervals.size(), 0);
  t.cells = Cells{
      {{9.8696e-03, kNone}, {1.3027e-02, kNone}, {3.8208e-03, kNone}},
      {{1.0719e-03, 3.15}, {1.6435e-03, 3.00}, {4.6147e-04, 3.03}},
      {{1.2038e-04, 3.13}, {2.0611e-04, 3.00}, {5.6560e-05, 3.01}},
      {{1.3765e-05, 3.11}, {2.5805e-05, 3.00}, {7.0003e-06, 3.01}},
      {{1.5891e-06, 3.11}, {3.2281e-06, 3.00}, {8.7069e-07, 3.00}},
      {{1.8439e-07, 3.01}, {4.0366e-07, 3.00}, {1.0857e-07, 3.00}},
      {{2.2872e-08, 3.00}, {5.0467e-08, 3.00}, {1.3563e-08, 2.96}},
  };
  return t;
}

ReferenceTable make_table5() {
  ReferenceTable t;
  t.id = 5;
  t.problem = TableProblem::diffusion;
  t.scheme = "order2";
  t.alphas = {1.1, 1.5, 1.9};
  t.intervals = {16, 32, 64, 128, 256, 512};
  t.steps = t.intervals;
  t.cells = Cells{
      {{1.0544e-05, kNone}, {9.0719e-06, kNone}, {5.6905e-06, kNone}},
      {{2.8172e-06, 1.90}, {2.3208e-06, 1.97}, {1.4309e-06, 1.99}},
      {{7.3008e-07, 1.95}, {5.8863e-07, 1.98}, {3.5731e-07, 2.00}},
      {{1.8606e-07, 1.97}, {1.4836e-07, 1.99}, {8.9332e-08, 2.00}},
      {{4.6984e-08, 1.99}, {3.7252e-08, 1.99}, {2.2338e-08, 2.00}},
      {{1.1806e-08, 1.99}, {9.3341e-09, 2.00}, {5.5852e-09, 2.00}},
  };
  return t;
}

ReferenceTable make_table6() {
  ReferenceTable t;
  t.id = 6;
  t.problem = TableProblem::diffusion;
  t.scheme = "order3";
  t.alphas = {1.1, 1.5, 1.9};
  t.intervals = {16, 32, 64, 128, 256, 512};
  t.steps = {65, 182, 513, 1449, 4097, 11586};
  t.cells = Cells{
      {{1.9461e-06, kNone}, {7.2807e-07, kNone}, {2.9010e-08, kNone}},
      {{2.4807e-07, 2.97}, {9.1351e-08, 2.99}, {2.7484e-09, 3.40}},
      {{3.1332e-08, 2.99}, {1.1401e-08, 3.00}, {5.3796e-10, 2.35}},
      {{3.9404e-09, 2.99}, {1.4224e-09, 3.00}, {7.9399e-11, 2.76}},
      {{4.9422e-10, 3.00}, {1.7758e-10, 3.00}, {1.0667e-11, 2.90}},
      {{6.1888e-11, 3.00}, {2.2183e-11, 3.00}, {1.3792e-12, 2.95}},
  };
  t.note =
      "M values are the printed ones; they are close to but not always equal to ceil(N^1.5) "
      "(e.g. 65 vs 64 at N=16)";
  return t;
}

}  // namespace

const ReferenceTable& reference_table(int id) {
  static const std::array<ReferenceTable, 4> tables = {make_table3(), make_table4(), make_table5(),
                                                       make_table6()};
  if (id < 3 || id > 6) throw UsageError("no reference table " + std::to_string(id));
  return tables[static_cast<std::size_t>(id - 3)];
}

std::span<const int> reference_table_ids() {
  static constexpr std::array<int, 4> ids = {3, 4, 5, 6};
  return ids;
}

}  // namespace fracgen
