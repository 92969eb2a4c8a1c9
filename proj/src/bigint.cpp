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

#include "treeminor/bigint.hpp"

#include "treeminor/errors.hpp"

namespace treeminor {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::kSubsetTooSmall: return "SubsetTooSmall";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kWrongForestClass: return "WrongForestClass";
    case ErrorCode::kNotZeroSum: return "NotZeroSum";
    case ErrorCode::kNotQuotientable: return "NotQuotientable";
    case ErrorCode::kClassificationImpossible: return "ClassificationImpossible";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIdentityViolation: return "IdentityViolation";
  }
  return "Unknown";
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt pow2(unsigned k) {
  BigInt out = 1;
  out <<= k;
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (unsigned i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;
  }
  return out;
}

BigMatrix::BigMatrix(std::size_t dim, std::vector<BigInt> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
  if (entries_.size() != dim_ * dim_) {
    throw Error(ErrorCode::kInvalidArgument,
                "matrix entry count does not match dimension");
  }
}

BigMatrix BigMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  BigMatrix out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw Error(ErrorCode::kInvalidArgument, "matrix is not square");
    }
    for (std::size_t c = 0; c < rows.size(); ++c) out(r, c) = rows[r][c];
  }
  return out;
}

bool BigMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r + 1; c < dim_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

}  // namespace treeminor
