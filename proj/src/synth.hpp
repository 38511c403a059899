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

#ifndef DPIDENT_SRC_SYNTH_H_
#define DPIDENT_SRC_SYNTH_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

namespace dpident {

// Deterministic generators for survey-like numeric columns, so the whole
// pipeline runs without access to any proprietary data set. Shapes, not
// moments, are the contract:
//
//   kWorkHours          integers in [0, 18], a mass at 0 plus a peak near 8
//   kDistanceWork       integers in [1, 675], bottom-heavy (median ~9) with
//                       a small cluster of long-distance outliers in
//                       [640, 675] including 675 itself
//   kMonthlyIncomeGross integers in [0, 2.7e6], log-normal around 2500 with
//                       a mass at 0 and one top-coded maximum
enum class SynthVariable { kWorkHours, kDistanceWork, kMonthlyIncomeGross };

// Wire names: "work-hours", "distance-work", "monthly-incomeGross".
const char* SynthVariableName(SynthVariable variable);
std::optional<SynthVariable> ParseSynthVariable(std::string_view name);

std::vector<double> SynthValues(SynthVariable variable, size_t n,
                                uint64_t seed);

// Writes a single-column CSV whose header is the variable name.
void SynthWriteCsv(SynthVariable variable, size_t n, uint64_t seed,
                   const std::filesystem::path& path);

}  // namespace dpident

#endif  // DPIDENT_SRC_SYNTH_H_
