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
#ifndef FRACGEN_PROPERTIES_HPP
#define FRACGEN_PROPERTIES_HPP

// Randomized and exhaustive checks of the structural invariants of the
// generators, operators and Crank-Nicolson scheme.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fracgen {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PropertyOptions {
  /// Negates w_1 of the (p=2, r=1) weights fed to the weight-data checks.
  /// Used to confirm the suite notices a broken generator.
  bool negate_first_weight = false;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<PropertyResult> results;

  int passed_count() const;
  int failed_count() const;
  bool all_passed() const { return failed_count() == 0; }
  const PropertyResult* find(const std::string& name) const;
};

inline constexpr std::uint64_t kDefaultPropertySeed = 20170523;

SuiteReport run_property_suite(std::uint64_t seed = kDefaultPropertySeed,
                               const PropertyOptions& options = {});

void print_suite(std::ostream& os, const SuiteReport& report);

}  // namespace fracgen

#endif  // FRACGEN_PROPERTIES_HPP
