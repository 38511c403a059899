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

#include "queries.hpp"

#include <cmath>
#include <cstdlib>

#include "errors.hpp"

namespace dpident {

const char* QueryKindName(QueryKind kind) {
  switch (kind) {
    case QueryKind::kCount:
      return "count";
    case QueryKind::kMean:
      return "mean";
    case QueryKind::kMedian:
      return "median";
    case QueryKind::kMin:
      return "min";
    case QueryKind::kMax:
      return "max";
    case QueryKind::kVariance:
      return "variance";
  }
  return "unknown";
}

std::optional<QueryKind> ParseQueryKind(std::string_view name) {
  for (QueryKind kind : kAllQueryKinds) {
    if (name == QueryKindName(kind)) return kind;
  }
  return std::nullopt;
}

namespace stats {

double Sum(std::span<const double> values) {
  double sum = 0.0;
  double compensation = 0.0;
  for (double x : values) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      compensation += (sum - t) + x;
    } else {
      compensation += (x - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

double Mean(std::span<const double> values) {
  return Sum(values) / static_cast<double>(values.size());
}

double MedianSorted(std::span<const double> values) {
  const size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

double SumSquaredDeviations(std::span<const double> values, double mean) {
  double sum = 0.0;
  double compensation = 0.0;
  for (double x : values) {
    const double d = x - mean;
    const double sq = d * d;
    const double t = sum + sq;
    if (sum >= sq) {
      compensation += (sum - t) + sq;
    } else {
      compensation += (sq - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

double PopulationVariance(std::span<const double> values) {
  const double mean = Mean(values);
  return SumSquaredDeviations(values, mean) /
         static_cast<double>(values.size());
}

}  // namespace stats

double Evaluate(QueryKind query, const Sample& sample) {
  const std::vector<double>& sorted = sample.sorted_values();
  switch (query) {
    case QueryKind::kCount:
      return static_cast<double>(sample.size());
    case QueryKind::kMean:
      return stats::Mean(sorted);
    case QueryKind::kMedian:
      return stats::MedianSorted(sorted);
    case QueryKind::kMin:
      return sorted.front();
    case QueryKind::kMax:
      return sorted.back();
    case QueryKind::kVariance:
      return stats::PopulationVariance(sorted);
  }
  throw DpError(ErrorCode::kInternal, "unreachable query kind");
}

}  // namespace dpident
