// Copyright 2026 The treeminor Authors
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

#ifndef TREEMINOR_ERRORS_HPP
#define TREEMINOR_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace treeminor {

enum class ErrorCode {
  kNotATree = 1,
  kVertexOutOfRange,
  kValueOutOfRange,
  kSubsetTooSmall,
  kBudgetExceeded,
  kWrongForestClass,
  kNotZeroSum,
  kNotQuotientable,
  kClassificationImpossible,
  kParseError,
  kInvalidArgument,
  kIdentityViolation,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto tm_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class BudgetExceeded : public Error {
 public:
  // `estimate` is the decimal work estimate that tripped the budget.
  BudgetExceeded(std::string estimate, unsigned long long budget)
      : Error(ErrorCode::kBudgetExceeded,
              "work estimate " + estimate + " exceeds budget " +
                  std::to_string(budget)),
        estimate_(std::move(estimate)),
        budget_(budget) {}

  const std::string& estimate() const noexcept { return estimate_; }
  unsigned long long budget() const noexcept { return budget_; }

 private:
  std::string estimate_;
  unsigned long long budget_;
};

}  // namespace treeminor

#endif  // TREEMINOR_ERRORS_HPP
