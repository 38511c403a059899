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

#include "mechanism.hpp"

#include <cmath>

#include "errors.hpp"
#include "rng.hpp"
#include "sensitivity.hpp"

namespace dpident {

double LaplaceScale(double delta_f, double epsilon) {
  if (!std::isfinite(epsilon) || epsilon <= 0) {
    throw DpError(ErrorCode::kInvalidEpsilon,
                  "epsilon must be finite and positive");
  }
  if (!std::isfinite(delta_f) || delta_f < 0) {
    throw DpError(ErrorCode::kInvalidArgument,
                  "delta_f must be finite and non-negative");
  }
  if (delta_f == 0) return 0.0;
  return delta_f / epsilon;
}

NoisyRelease Release(const Universe& universe, const Sample& sample,
                     QueryKind query, double epsilon, uint64_t seed) {
  NoisyRelease release;
  release.epsilon = epsilon;
  release.seed = seed;
  release.true_value = Evaluate(query, sample);
  release.scale = LaplaceScale(GlobalSensitivity(universe, query), epsilon);
  SplitMix64 rng(seed);
  const double noise = LaplaceInverseCdf(rng.NextUnit(), release.scale);
  release.noisy_value = release.true_value + noise;
  return release;
}

}  // namespace dpident
