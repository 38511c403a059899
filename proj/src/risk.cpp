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

#include "risk.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace dpident {

namespace {

void CheckEpsilon(double epsilon) {
  if (!std::isfinite(epsilon) || epsilon <= 0) {
    throw DpError(ErrorCode::kInvalidArgument,
                  "epsilon must be finite and positive");
  }
}

// Ratio dv/df with the zero rule: a query whose output never varies leaks
// nothing, so df == 0 maps to ratio 0.
double SensitivityRatio(double delta_v, double delta_f) {
  if (delta_v < 0 || delta_f < 0 || delta_v > delta_f) {
    throw DpError(ErrorCode::kInvalidSensitivity,
                  "sensitivities must satisfy 0 <= delta_v <= delta_f");
  }
  if (delta_f == 0) return 0.0;
  return delta_v / delta_f;
}

double ManyWorldsFromRatio(double epsilon, uint64_t n, double ratio) {
  if (n == 1) return 1.0;
  return 1.0 / (1.0 + static_cast<double>(n - 1) * std::exp(-epsilon * ratio));
}

double TwoWorldsFromRatio(double epsilon, double ratio) {
  return 1.0 / (1.0 + std::exp(-epsilon * ratio));
}

}  // namespace

double RiskManyWorlds(double epsilon, uint64_t n, double delta_v,
                      double delta_f) {
  CheckEpsilon(epsilon);
  if (n < 1) {
    throw DpError(ErrorCode::kInvalidArgument, "n must be at least 1");
  }
  return ManyWorldsFromRatio(epsilon, n, SensitivityRatio(delta_v, delta_f));
}

double RiskTwoWorlds(double epsilon, double delta_v, double delta_f) {
  CheckEpsilon(epsilon);
  return TwoWorldsFromRatio(epsilon, SensitivityRatio(delta_v, delta_f));
}

double RiskGlobal(double epsilon) {
  CheckEpsilon(epsilon);
  return 1.0 / (1.0 + std::exp(-epsilon));
}

RiskReport ComputeRiskReport(const Universe& universe, const Sample& sample,
                             QueryKind query, double epsilon,
                             LocalMethod method) {
  CheckEpsilon(epsilon);
  RiskReport report;
  report.query = query;
  report.inputs.epsilon = epsilon;
  report.inputs.n = sample.size();
  report.inputs.sensitivities =
      ComputeSensitivityPair(universe, sample, query, method);

  const SensitivityPair& s = report.inputs.sensitivities;
  double ratio = s.global_delta_f == 0 ? 0.0 : s.local_delta_v / s.global_delta_f;
  // delta_v <= delta_f holds mathematically for every engine; anything above
  // 1 here is floating-point noise from the incremental statistics.
  report.ratio = std::clamp(ratio, 0.0, 1.0);
  report.rho_mw = ManyWorldsFromRatio(epsilon, report.inputs.n, report.ratio);
  report.rho_tw = TwoWorldsFromRatio(epsilon, report.ratio);
  report.rho_gl = RiskGlobal(epsilon);
  return report;
}

}  // namespace dpident
