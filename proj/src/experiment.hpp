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

#ifndef DPIDENT_SRC_EXPERIMENT_H_
#define DPIDENT_SRC_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "model.hpp"
#include "queries.hpp"
#include "sensitivity.hpp"

namespace dpident {

struct SweepVariable {
  std::string label;
  std::shared_ptr<const Universe> universe;
};

struct SweepConfig {
  std::vector<SweepVariable> variables;
  std::vector<QueryKind> queries;
  std::vector<double> epsilons;      // each > 0
  std::vector<double> proportions;   // each in (0, 1]
  int repetitions = 100;
  uint64_t master_seed = 0;
  LocalMethod local_method = LocalMethod::kExactScan;
  int threads = 1;  // worker count; never affects the output
};

struct SweepRow {
  std::string variable;
  QueryKind query = QueryKind::kCount;
  double epsilon = 0;
  double proportion = 0;
  size_t sample_size = 0;
  int repetition = 0;
  double delta_f = 0;
  double delta_v = 0;
  double rho_mw = 0;
  double rho_tw = 0;
  double rho_gl = 0;
};

// A (variable, proportion) pair whose sample size floors to zero is skipped
// for all repetitions and recorded here instead of failing the sweep.
struct SkippedCell {
  std::string variable;
  double proportion = 0;
  std::string reason;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // canonical nested order: variable, query,
                               // epsilon, proportion, repetition
  std::vector<SkippedCell> skipped;
};

struct AggregateStats {
  double mean = 0;
  double min = 0;
  double p25 = 0;
  double p50 = 0;
  double p75 = 0;
  double max = 0;
};

struct AggregateCell {
  std::string variable;
  QueryKind query = QueryKind::kCount;
  double epsilon = 0;
  double proportion = 0;
  size_t repetitions = 0;
  AggregateStats rho_mw;
  AggregateStats rho_tw;
  AggregateStats rho_gl;
};

// Per-task seed: master_seed folded with each grouping index through the
// SplitMix64 finalizer, in the order variable, query, epsilon, proportion,
// repetition. Any scheduling of the tasks reproduces the same streams.
uint64_t DeriveTaskSeed(uint64_t master_seed, size_t variable_index,
                        size_t query_index, size_t epsilon_index,
                        size_t proportion_index, size_t repetition_index);

// Uniform sample without replacement of floor(proportion * |universe|)
// elements, deterministic per seed (partial Fisher-Yates over SplitMix64).
// Throws SampleTooSmall when the floored size is zero.
Sample DrawSample(std::shared_ptr<const Universe> universe, double proportion,
                  uint64_t seed);

// Runs the full cross product. Output is a pure function of the config,
// independent of the worker count; rows appear in canonical nested order.
SweepResult RunSweep(const SweepConfig& config);

// One cell per grouping-key combination, statistics across the repetition
// dimension. Percentiles use linear interpolation between order statistics
// (the common "type 7" rule).
std::vector<AggregateCell> Aggregate(std::span<const SweepRow> rows);

// Column order is fixed: variable, query, epsilon, proportion, sample_size,
// repetition, delta_f, delta_v, rho_mw, rho_tw, rho_gl. Doubles are written
// in shortest round-trip form, so equal configs yield byte-equal files.
void WriteRowsCsv(std::span<const SweepRow> rows, std::ostream& out);
void WriteAggregateCsv(std::span<const AggregateCell> cells,
                       std::ostream& out);
void WriteRowsJson(std::span<const SweepRow> rows, std::ostream& out);
void WriteAggregateJson(std::span<const AggregateCell> cells,
                        std::ostream& out);

}  // namespace dpident

#endif  // DPIDENT_SRC_EXPERIMENT_H_
