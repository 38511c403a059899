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

#ifndef DPIDENT_SRC_SENSITIVITY_H_
#define DPIDENT_SRC_SENSITIVITY_H_

#include <cstddef>
#include <optional>
#include <string_view>

#include "model.hpp"
#include "queries.hpp"

namespace dpident {

// Engine used for the local sensitivity of a SensitivityPair.
//
// kAnalyticPaper checks only the extreme-case neighbor candidates (add the
// universe minimum/maximum, remove the sample minimum/maximum; the matching
// one-sided pairs for min/max). This is exact for count, mean, median, min
// and max, but can underestimate the variance query, where adding a value
// near the mean may move the variance more than any extreme does.
//
// kExactScan checks every valid neighbor (each distinct universe value as an
// addition, each distinct sample value as a removal) with incremental
// statistics, and is exact for all queries. It is the default for risk
// computation.
enum class LocalMethod { kAnalyticPaper, kExactScan };

enum class SensitivityMethod { kAnalyticPaper, kExactScan, kBruteForce };

// Wire names: "analytic-paper", "exact-scan", "brute-force".
const char* LocalMethodName(LocalMethod method);
const char* SensitivityMethodName(SensitivityMethod method);
std::optional<LocalMethod> ParseLocalMethod(std::string_view name);

struct SensitivityPair {
  double global_delta_f = 0;
  double local_delta_v = 0;
  SensitivityMethod method = SensitivityMethod::kExactScan;
};

// Closed-form global sensitivity over the universe bounds. With
// R = max_bound - min_bound: count -> 1, mean and median -> R/2,
// min and max -> R, variance -> (R/2)^2.
double GlobalSensitivity(const Universe& universe, QueryKind query);

// Largest absolute change of the query value between the sample and a
// neighbor, per the selected engine. Additions draw from the observed
// universe values; removals are skipped for single-element samples.
double LocalSensitivity(const Universe& universe, const Sample& sample,
                        QueryKind query, LocalMethod method);

SensitivityPair ComputeSensitivityPair(const Universe& universe,
                                       const Sample& sample, QueryKind query,
                                       LocalMethod method);

// Enumeration caps for the exhaustive global oracle; roughly 10^3
// sub-multisets at the defaults.
struct BruteForceCaps {
  size_t max_distinct = 8;
  size_t max_size = 12;
};

// Exact maximum of |f(X) - f(X')| over every non-empty sub-multiset X of the
// universe and every valid neighbor X' of it. Each statistic is evaluated
// from scratch, so this is an oracle independent of the closed forms and of
// the incremental engines. Throws UniverseTooLarge beyond the caps.
double BruteForceGlobal(const Universe& universe, QueryKind query,
                        const BruteForceCaps& caps = {});

// Exact maximum of |f(X) - f(X')| over every valid neighbor of `sample`,
// materializing each neighbor and evaluating it from scratch.
double BruteForceLocal(const Universe& universe, const Sample& sample,
                       QueryKind query, size_t max_universe_distinct = 4096);

}  // namespace dpident

#endif  // DPIDENT_SRC_SENSITIVITY_H_
