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

#include "synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "csv.hpp"
#include "errors.hpp"
#include "rng.hpp"

namespace dpident {

const char* SynthVariableName(SynthVariable variable) {
  switch (variable) {
    case SynthVariable::kWorkHours:
      return "work-hours";
    case SynthVariable::kDistanceWork:
      return "distance-work";
    case SynthVariable::kMonthlyIncomeGross:
      return "monthly-incomeGross";
  }
  return "unknown";
}

std::optional<SynthVariable> ParseSynthVariable(std::string_view name) {
  for (SynthVariable v :
       {SynthVariable::kWorkHours, SynthVariable::kDistanceWork,
        SynthVariable::kMonthlyIncomeGross}) {
    if (name == SynthVariableName(v)) return v;
  }
  return std::nullopt;
}

namespace {

double NextNormal(SplitMix64& rng) {
  // Box-Muller; NextUnit never returns 0 or 1.
  const double u1 = rng.NextUnit();
  const double u2 = rng.NextUnit();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double Clamp(double v, double lo, double hi) {
  return std::min(std::max(v, lo), hi);
}

void Shuffle(std::vector<double>& values, SplitMix64& rng) {
  for (size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[rng.NextBounded(i)]);
  }
}

std::vector<double> WorkHours(size_t n, SplitMix64& rng) {
  std::vector<double> values;
  values.reserve(n);
  values.push_back(0.0);  // pin the documented bounds
  values.push_back(18.0);
  while (values.size() < n) {
    if (rng.NextUnit() < 0.25) {
      values.push_back(0.0);
    } else {
      values.push_back(std::round(Clamp(7.8 + 3.0 * NextNormal(rng), 0, 18)));
    }
  }
  return values;
}

std::vector<double> DistanceWork(size_t n, SplitMix64& rng) {
  std::vector<double> values;
  values.reserve(n);
  // Long-distance commuter cluster, evenly spread up to the top value.
  const size_t cluster = std::max<size_t>(1, n / 500);
  for (size_t i = 0; i < cluster && values.size() < n; ++i) {
    const double t = cluster == 1
                         ? 1.0
                         : static_cast<double>(i) /
                               static_cast<double>(cluster - 1);
    values.push_back(std::round(640.0 + 35.0 * t));
  }
  while (values.size() < n) {
    const double v = std::exp(std::log(9.0) + 0.75 * NextNormal(rng));
    values.push_back(std::round(Clamp(v, 1, 150)));
  }
  return values;
}

std::vector<double> MonthlyIncomeGross(size_t n, SplitMix64& rng) {
  std::vector<double> values;
  values.reserve(n);
  values.push_back(0.0);
  values.push_back(2700000.0);  // top-coded maximum
  while (values.size() < n) {
    if (rng.NextUnit() < 0.05) {
      values.push_back(0.0);
    } else {
      const double v = std::exp(std::log(2500.0) + 1.0 * NextNormal(rng));
      values.push_back(std::round(Clamp(v, 1, 2700000)));
    }
  }
  return values;
}

}  // namespace

std::vector<double> SynthValues(SynthVariable variable, size_t n,
                                uint64_t seed) {
  if (n == 0) {
    throw DpError(ErrorCode::kInvalidArgument,
                  "synthetic column size must be at least 1");
  }
  SplitMix64 rng(seed);
  std::vector<double> values;
  switch (variable) {
    case SynthVariable::kWorkHours:
      values = WorkHours(n, rng);
      break;
    case SynthVariable::kDistanceWork:
      values = DistanceWork(n, rng);
      break;
    case SynthVariable::kMonthlyIncomeGross:
      values = MonthlyIncomeGross(n, rng);
      break;
  }
  values.resize(n);
  Shuffle(values, rng);
  return values;
}

void SynthWriteCsv(SynthVariable variable, size_t n, uint64_t seed,
                   const std::filesystem::path& path) {
  const std::vector<double> values = SynthValues(variable, n, seed);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw DpError(ErrorCode::kIoError,
                  "cannot write '" + path.string() + "'");
  }
  out << SynthVariableName(variable) << '\n';
  for (double v : values) out << csv::FormatDouble(v) << '\n';
  if (!out.flush()) {
    throw DpError(ErrorCode::kIoError, "write failed: '" + path.string() + "'");
  }
}

}  // namespace dpident
