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

#ifndef DPIDENT_SRC_RISK_H_
#define DPIDENT_SRC_RISK_H_

#include <cstdint>

#include "model.hpp"
#include "queries.hpp"
#include "sensitivity.hpp"

namespace dpident {

struct RiskInputs {
  double epsilon = 0;
  uint64_t n = 0;  // number of subjects in the queried data set
  SensitivityPair sensitivities;
};

// The three identifiability-risk metrics for one configuration. All three
// are upper bounds; the bound value itself is reported.
//
//   rho_mw = 1 / (1 + (n-1) * exp(-eps * dv/df))   many-worlds
//   rho_tw = 1 / (1 + exp(-eps * dv/df))           two-worlds
//   rho_gl = 1 / (1 + exp(-eps))                   worst case, ratio = 1
struct RiskReport {
  double rho_mw = 0;
  double rho_tw = 0;
  double rho_gl = 0;
  RiskInputs inputs;
  QueryKind query = QueryKind::kCount;
  double ratio = 0;  // dv/df, in [0, 1]; 0 when df == 0 (degenerate universe)
};

// Throws InvalidArgument for epsilon <= 0 or n < 1, InvalidSensitivity when
// delta_v > delta_f or either is negative. n == 1 yields exactly 1.
double RiskManyWorlds(double epsilon, uint64_t n, double delta_v,
                      double delta_f);

// Bounded in [0.5, 1); equals 0.5 when delta_v == 0.
double RiskTwoWorlds(double epsilon, double delta_v, double delta_f);

// Depends only on epsilon; bounded in (0.5, 1).
double RiskGlobal(double epsilon);

// Computes all three metrics with n = |sample|, the closed-form global
// sensitivity and the selected local engine. A zero global sensitivity
// (degenerate universe) yields ratio = 0; floating-point overshoot of the
// ratio above 1 is clamped.
RiskReport ComputeRiskReport(const Universe& universe, const Sample& sample,
                             QueryKind query, double epsilon,
                             LocalMethod method);

}  // namespace dpident

#endif  // DPIDENT_SRC_RISK_H_
