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

#ifndef DPIDENT_SRC_QUERIES_H_
#define DPIDENT_SRC_QUERIES_H_

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "model.hpp"

namespace dpident {

enum class QueryKind { kCount, kMean, kMedian, kMin, kMax, kVariance };

inline constexpr std::array<QueryKind, 6> kAllQueryKinds = {
    QueryKind::kCount, QueryKind::kMean, QueryKind::kMedian,
    QueryKind::kMin,   QueryKind::kMax,  QueryKind::kVariance};

// Lowercase wire names: "count", "mean", "median", "min", "max", "variance".
const char* QueryKindName(QueryKind kind);
std::optional<QueryKind> ParseQueryKind(std::string_view name);

// Evaluates the statistic on the sample. Median of an even-sized sample is
// the midpoint of the two central order statistics; Variance is the
// population variance (divide by n).
double Evaluate(QueryKind query, const Sample& sample);

namespace stats {

// Neumaier-compensated summation.
double Sum(std::span<const double> values);
double Mean(std::span<const double> values);
// `values` must be sorted ascending.
double MedianSorted(std::span<const double> values);
// Two-pass population variance (compensated in both passes).
double PopulationVariance(std::span<const double> values);
// Sum of squared deviations from the mean (the M2 statistic); population
// variance is M2 / n.
double SumSquaredDeviations(std::span<const double> values, double mean);

}  // namespace stats

}  // namespace dpident

#endif  // DPIDENT_SRC_QUERIES_H_
