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

#ifndef DPIDENT_SRC_RNG_H_
#define DPIDENT_SRC_RNG_H_

#include <cmath>
#include <cstdint>

namespace dpident {

// Output function of the SplitMix64 generator (Steele, Lea, Flood 2014).
// Used both as the PRNG step and as the mixing hash for per-task seeds, so
// that every random decision in the library is bit-reproducible from a seed
// regardless of platform or standard-library implementation.
inline uint64_t SplitMix64Mix(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return SplitMix64Mix(state_);
  }

  // Uniform double in the open interval (0, 1), symmetric around 0.5:
  // the top 53 bits are offset by half a step, so 0 and 1 are unreachable
  // and u and 1-u are equally likely.
  double NextUnit() {
    return (static_cast<double>(Next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound) via rejection sampling (no modulo bias).
  uint64_t NextBounded(uint64_t bound) {
    const uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const uint64_t r = Next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  uint64_t state_;
};

// Inverse-CDF sample of the Laplace(0, scale) distribution from a uniform
// draw in (0, 1). scale == 0 yields exactly 0.
inline double LaplaceInverseCdf(double unit, double scale) {
  if (scale == 0.0) return 0.0;
  if (unit < 0.5) return scale * std::log(2.0 * unit);
  return -scale * std::log(2.0 * (1.0 - unit));
}

}  // namespace dpident

#endif  // DPIDENT_SRC_RNG_H_
