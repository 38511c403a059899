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

#ifndef DPIDENT_SRC_INGEST_H_
#define DPIDENT_SRC_INGEST_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "model.hpp"

namespace dpident {

// How one CSV column becomes a Universe. Survey codes for missing answers
// are conventionally negative, hence the default rule; an explicit code
// list supports other encodings. min_floor_zero widens the lower universe
// bound to 0 for variables where 0 is a valid answer that may simply not
// have been observed.
struct IngestPolicy {
  enum class MissingRule { kDropNegatives, kDropListedCodes };

  MissingRule missing_rule = MissingRule::kDropNegatives;
  std::vector<double> missing_codes;  // used with kDropListedCodes
  bool min_floor_zero = false;
  // Header name or zero-based column index.
  std::variant<std::string, size_t> column;
};

struct DescriptiveStats {
  size_t n = 0;
  double min = 0;
  double max = 0;
  double mean = 0;
  double median = 0;
  double std_dev = 0;  // population standard deviation
};

// Loads one numeric column into a Universe, keeping retained values in file
// order and untransformed. The universe label is the column header (or
// "column_<index>"). Throws IoError / ColumnNotFound / ParseError (with the
// 1-based data row number) / EmptyAfterFilter; min_floor_zero with retained
// negative values is an InvalidArgument.
Universe LoadColumn(const std::filesystem::path& path,
                    const IngestPolicy& policy);

std::shared_ptr<const Universe> LoadColumnShared(
    const std::filesystem::path& path, const IngestPolicy& policy);

DescriptiveStats Summarize(const Universe& universe);

}  // namespace dpident

#endif  // DPIDENT_SRC_INGEST_H_
