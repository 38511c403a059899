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

#ifndef DPIDENT_SRC_MODEL_H_
#define DPIDENT_SRC_MODEL_H_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace dpident {

// The finite multiset of known values for one variable. Duplicates are
// distinct individuals. Bounds default to the observed value range but may
// be widened (e.g. min_bound = 0 when 0 is a valid answer that was never
// observed); they drive the closed-form global sensitivities.
//
// Immutable after construction; safe to share across threads.
class Universe {
 public:
  // Bounds default to the observed min/max of `values`.
  static Universe FromValues(std::vector<double> values, std::string label);
  static Universe FromValues(std::vector<double> values, std::string label,
                             double min_bound, double max_bound);

  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& sorted_values() const { return sorted_; }
  // Sorted, deduplicated values. These are the add-candidates for the
  // neighbor relation: membership is by value, not by multiplicity.
  const std::vector<double>& distinct_values() const { return distinct_; }

  size_t size() const { return values_.size(); }
  double min_value() const { return sorted_.front(); }
  double max_value() const { return sorted_.back(); }
  double min_bound() const { return min_bound_; }
  double max_bound() const { return max_bound_; }
  double range() const { return max_bound_ - min_bound_; }
  const std::string& label() const { return label_; }

  // Exact comparison; values are never arithmetically transformed between
  // ingest and storage, so bit-identical doubles are the membership rule.
  bool Contains(double v) const;

 private:
  Universe() = default;

  std::vector<double> values_;
  std::vector<double> sorted_;
  std::vector<double> distinct_;
  double min_bound_ = 0;
  double max_bound_ = 0;
  std::string label_;
};

std::shared_ptr<const Universe> MakeUniverse(std::vector<double> values,
                                             std::string label);
std::shared_ptr<const Universe> MakeUniverse(std::vector<double> values,
                                             std::string label,
                                             double min_bound,
                                             double max_bound);

// A non-empty multiset drawn from a Universe; the queried database X.
// Keeps shared ownership of its source universe, so a Sample handle stays
// valid regardless of destruction order.
class Sample {
 public:
  // Every value must occur in the universe (by value). Throws
  // ValueNotInUniverse otherwise and InvalidArgument for an empty sample.
  Sample(std::shared_ptr<const Universe> universe, std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& sorted_values() const { return sorted_; }
  size_t size() const { return values_.size(); }
  const Universe& universe() const { return *universe_; }
  const std::shared_ptr<const Universe>& universe_ptr() const {
    return universe_;
  }

 private:
  std::shared_ptr<const Universe> universe_;
  std::vector<double> values_;
  std::vector<double> sorted_;
};

// One step of the neighbor relation: add one universe value (duplicates
// allowed) or remove the element at one position.
struct NeighborOp {
  enum class Kind { kAddValue, kRemoveIndex };

  static NeighborOp AddValue(double v) {
    return NeighborOp{Kind::kAddValue, v, 0};
  }
  static NeighborOp RemoveIndex(size_t i) {
    return NeighborOp{Kind::kRemoveIndex, 0.0, i};
  }

  Kind kind;
  double value;
  size_t index;
};

// Returns the neighboring sample differing from `sample` by exactly one
// element. Throws ValueNotInUniverse / RemovalWouldEmpty / InvalidArgument.
Sample ApplyNeighbor(const Sample& sample, const NeighborOp& op);

}  // namespace dpident

#endif  // DPIDENT_SRC_MODEL_H_
