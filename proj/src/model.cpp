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

#include "model.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "errors.hpp"

namespace dpident {

namespace {

void CheckFinite(const std::vector<double>& values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw DpError(ErrorCode::kInvalidArgument,
                    std::string(what) + " contains a non-finite value");
    }
  }
}

}  // namespace

Universe Universe::FromValues(std::vector<double> values, std::string label) {
  if (values.empty()) {
    throw DpError(ErrorCode::kInvalidArgument, "universe must be non-empty");
  }
  CheckFinite(values, "universe");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double min_bound = *lo;
  const double max_bound = *hi;
  return FromValues(std::move(values), std::move(label), min_bound, max_bound);
}

Universe Universe::FromValues(std::vector<double> values, std::string label,
                              double min_bound, double max_bound) {
  if (values.empty()) {
    throw DpError(ErrorCode::kInvalidArgument, "universe must be non-empty");
  }
  CheckFinite(values, "universe");
  if (!std::isfinite(min_bound) || !std::isfinite(max_bound)) {
    throw DpError(ErrorCode::kInvalidArgument,
                  "universe bounds must be finite");
  }
  Universe u;
  u.values_ = std::move(values);
  u.sorted_ = u.values_;
  std::sort(u.sorted_.begin(), u.sorted_.end());
  if (min_bound > u.sorted_.front() || max_bound < u.sorted_.back()) {
    throw DpError(ErrorCode::kInvalidArgument,
                  "universe bounds must enclose the observed values");
  }
  u.distinct_ = u.sorted_;
  u.distinct_.erase(std::unique(u.distinct_.begin(), u.distinct_.end()),
                    u.distinct_.end());
  u.min_bound_ = min_bound;
  u.max_bound_ = max_bound;
  u.label_ = std::move(label);
  return u;
}

bool Universe::Contains(double v) const {
  return std::binary_search(distinct_.begin(), distinct_.end(), v);
}

std::shared_ptr<const Universe> MakeUniverse(std::vector<double> values,
                                             std::string label) {
  return std::make_shared<const Universe>(
      Universe::FromValues(std::move(values), std::move(label)));
}

std::shared_ptr<const Universe> MakeUniverse(std::vector<double> values,
                                             std::string label,
                                             double min_bound,
                                             double max_bound) {
  return std::make_shared<const Universe>(Universe::FromValues(
      std::move(values), std::move(label), min_bound, max_bound));
}

Sample::Sample(std::shared_ptr<const Universe> universe,
               std::vector<double> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (universe_ == nullptr) {
    throw DpError(ErrorCode::kInvalidArgument, "sample requires a universe");
  }
  if (values_.empty()) {
    throw DpError(ErrorCode::kInvalidArgument, "sample must be non-empty");
  }
  for (double v : values_) {
    if (!universe_->Contains(v)) {
      throw DpError(ErrorCode::kValueNotInUniverse,
                    "sample value " + std::to_string(v) +
                        " does not occur in universe '" + universe_->label() +
                        "'");
    }
  }
  sorted_ = values_;
  std::sort(sorted_.begin(), sorted_.end());
}

Sample ApplyNeighbor(const Sample& sample, const NeighborOp& op) {
  switch (op.kind) {
    case NeighborOp::Kind::kAddValue: {
      if (!sample.universe().Contains(op.value)) {
        throw DpError(ErrorCode::kValueNotInUniverse,
                      "cannot add " + std::to_string(op.value) +
                          ": not a universe value");
      }
      std::vector<double> next = sample.values();
      next.push_back(op.value);
      return Sample(sample.universe_ptr(), std::move(next));
    }
    case NeighborOp::Kind::kRemoveIndex: {
      if (op.index >= sample.size()) {
        throw DpError(ErrorCode::kInvalidArgument,
                      "remove index out of range");
      }
      if (sample.size() == 1) {
        throw DpError(ErrorCode::kRemovalWouldEmpty,
                      "removing the last element would empty the sample");
      }
      std::vector<double> next = sample.values();
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(op.index));
      return Sample(sample.universe_ptr(), std::move(next));
    }
  }
  throw DpError(ErrorCode::kInternal, "unreachable neighbor op kind");
}

}  // namespace dpident
