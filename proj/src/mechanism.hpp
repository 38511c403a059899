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

#ifndef DPIDENT_SRC_MECHANISM_H_
#define DPIDENT_SRC_MECHANISM_H_

#include <cstdint>

#include "model.hpp"
#include "queries.hpp"

namespace dpident {

struct NoisyRelease {
  double true_value = 0;
  double noisy_value = 0;
  double scale = 0;  // Laplace scale b = delta_f / epsilon
  double epsilon = 0;
  uint64_t seed = 0;
};

// Laplace scale delta_f / epsilon; 0 when delta_f is 0. Throws
// InvalidEpsilon for epsilon <= 0, InvalidArgument for negative delta_f.
double LaplaceScale(double delta_f, double epsilon);

// Releases the query value plus Laplace noise calibrated to the GLOBAL
// sensitivity (the risk metrics assume exactly this calibration). Sampling
// is inverse-CDF from a single SplitMix64 draw, so the release is
// bit-reproducible for a fixed seed.
NoisyRelease Release(const Universe& universe, const Sample& sample,
                     QueryKind query, double epsilon, uint64_t seed);

}  // namespace dpident

#endif  // DPIDENT_SRC_MECHANISM_H_
