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

#ifndef TREEMINOR_BIGINT_HPP
#define TREEMINOR_BIGINT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace treeminor {

// Single exact numeric type used for every count, distance and determinant.
using BigInt = boost::multiprecision::cpp_int;

std::string to_decimal(const BigInt& value);

// 2^k.
BigInt pow2(unsigned k);

// (-1)^k.
inline int sign_power(unsigned k) { return (k % 2 == 0) ? 1 : -1; }

BigInt binomial(unsigned n, unsigned k);

// Dense square matrix of big integers, row-major.
class BigMatrix {
 public:
  BigMatrix() = default;
  explicit BigMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  BigMatrix(std::size_t dim, std::vector<BigInt> row_major);

  static BigMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t dim() const noexcept { return dim_; }

  const BigInt& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  BigInt& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }

  bool is_symmetric() const;

  friend bool operator==(const BigMatrix&, const BigMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> entries_;
};

// Distance matrices are plain big-integer matrices with extra invariants
// (symmetric, zero diagonal, nonnegative) established by their producer.
using DistMatrix = BigMatrix;

}  // namespace treeminor

#endif  // TREEMINOR_BIGINT_HPP
