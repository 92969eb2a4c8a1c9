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


#ifndef TREEMINOR_REPORT_HPP
#define TREEMINOR_REPORT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "treeminor/identities.hpp"
#include "treeminor/minors.hpp"
#include "treeminor/tree.hpp"

namespace treeminor {

enum class OutputFormat { kJson, kCsv, kText };

// Throws ParseError for anything but json, csv or text.
OutputFormat parse_output_format(std::string_view name);

// Big integers are written as decimal strings in JSON. Every document ends
// with a newline.
std::string format_minor_report(const MinorReport& r, OutputFormat format);

// One value from a single-route computation.
std::string format_single_value(const Tree& tree, const SubsetS& s, std::string_view method,
                                const BigInt& value, OutputFormat format);

enum class ForestKind { kSRooted, kSStar };
ForestKind parse_forest_kind(std::string_view name);

std::string format_forests(const Tree& tree, const SubsetS& s, ForestKind kind,
                           OutputFormat format);

// Every catalyst in canonical order; with `classify`, also one record per
// induced arrowflow. Throws BudgetExceeded.
std::string format_catalysts(const Tree& tree, const SubsetS& s, std::uint64_t budget,
                             bool classify, OutputFormat format);

// One line per record; JSON output is one object per line.
std::string format_identity_records(const std::vector<IdentityRecord>& records,
                                    OutputFormat format);

}  // namespace treeminor

#endif  // TREEMINOR_REPORT_HPP
