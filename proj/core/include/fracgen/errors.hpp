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

#ifndef FRACGEN_ERRORS_HPP
#define FRACGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracgen {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke a precondition on shapes or sizes (mismatched truncation,
/// too few weights, N < 2, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Generator violates the consistency conditions (sum of beta != 0, or the
/// normalized symbol does not start with 1).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

class ConstructionFailure : public Error {
 public:
  using Error::Error;
};

/// Linear solve failed (singular or numerically singular matrix).
class SolverFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace fracgen

#endif  // FRACGEN_ERRORS_HPP
