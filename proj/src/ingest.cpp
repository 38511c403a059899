// Copyright 2026 The dpident Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "csv.hpp"
#include "errors.hpp"
#include "queries.hpp"

namespace dpident {

namespace {

bool ParseCell(std::string_view cell, double* out) {
  // Trim ASCII whitespace; std::from_chars is locale-independent.
  while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) {
    cell.remove_prefix(1);
  }
  while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t')) {
    cell.remove_suffix(1);
  }
  if (cell.empty()) return false;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  if (*begin == '+') ++begin;  // from_chars rejects an explicit plus
  const auto [ptr, ec] = std::from_chars(begin, end, *out);
  return ec == std::errc() && ptr == end && std::isfinite(*out);
}

bool IsMissing(double value, const IngestPolicy& policy) {
  if (policy.missing_rule == IngestPolicy::MissingRule::kDropNegatives) {
    return value < 0;
  }
  return std::find(policy.missing_codes.begin(), policy.missing_codes.end(),
                   value) != policy.missing_codes.end();
}

}  // namespace

Universe LoadColumn(const std::filesystem::path& path,
                    const IngestPolicy& policy) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw DpError(ErrorCode::kIoError,
                  "cannot open '" + path.string() + "'");
  }
  const auto records = csv::ReadRecords(file);
  if (records.empty()) {
    throw DpError(ErrorCode::kEmptyAfterFilter,
                  "'" + path.string() + "' has no header row");
  }

  const std::vector<std::string>& header = records.front();
  size_t column = 0;
  std::string label;
  if (const std::string* name = std::get_if<std::string>(&policy.column)) {
    const auto it = std::find(header.begin(), header.end(), *name);
    if (it == header.end()) {
      throw DpError(ErrorCode::kColumnNotFound,
                    "column '" + *name + "' not found in '" + path.string() +
                        "'");
    }
    column = static_cast<size_t>(it - header.begin());
    label = *name;
  } else {
    column = std::get<size_t>(policy.column);
    if (column >= header.size()) {
      throw DpError(ErrorCode::kColumnNotFound,
                    "column index " + std::to_string(column) +
                        " out of range (header has " +
                        std::to_string(header.size()) + " fields)");
    }
    label = header[column].empty() ? "column_" + std::to_string(column)
                                   : header[column];
  }

  std::vector<double> values;
  values.reserve(records.size() - 1);
  for (size_t row = 1; row < records.size(); ++row) {
    const std::vector<std::string>& record = records[row];
    if (column >= record.size()) {
      throw DpError(ErrorCode::kParseError,
                    "row " + std::to_string(row) + ": only " +
                        std::to_string(record.size()) + " fields");
    }
    double value = 0;
    if (!ParseCell(record[column], &value)) {
      throw DpError(ErrorCode::kParseError,
                    "row " + std::to_string(row) + ": not a number: '" +
                        record[column] + "'");
    }
    if (!IsMissing(value, policy)) values.push_back(value);
  }
  if (values.empty()) {
    throw DpError(ErrorCode::kEmptyAfterFilter,
                  "column '" + label + "' has no valid values after the "
                  "missing-value filter");
  }

  if (!policy.min_floor_zero) {
    return Universe::FromValues(std::move(values), std::move(label));
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*lo < 0) {
    throw DpError(ErrorCode::kInvalidArgument,
                  "min_floor_zero requires non-negative retained values "
                  "(found " + csv::FormatDouble(*lo) + ")");
  }
  const double max_bound = *hi;
  return Universe::FromValues(std::move(values), std::move(label), 0.0,
                              max_bound);
}

std::shared_ptr<const Universe> LoadColumnShared(
    const std::filesystem::path& path, const IngestPolicy& policy) {
  return std::make_shared<const Universe>(LoadColumn(path, policy));
}

DescriptiveStats Summarize(const Universe& universe) {
  const std::vector<double>& sorted = universe.sorted_values();
  DescriptiveStats stats;
  stats.n = universe.size();
  stats.min = sorted.front();
  stats.max = sorted.back();
  stats.mean = stats::Mean(sorted);
  stats.median = stats::MedianSorted(sorted);
  stats.std_dev = std::sqrt(stats::PopulationVariance(sorted));
  return stats;
}

}  // namespace dpident
