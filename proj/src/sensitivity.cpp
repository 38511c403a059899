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

#include "sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"

namespace dpident {

const char* LocalMethodName(LocalMethod method) {
  switch (method) {
    case LocalMethod::kAnalyticPaper:
      return "analytic-paper";
    case LocalMethod::kExactScan:
      return "exact-scan";
  }
  return "unknown";
}

const char* SensitivityMethodName(SensitivityMethod method) {
  switch (method) {
    case SensitivityMethod::kAnalyticPaper:
      return "analytic-paper";
    case SensitivityMethod::kExactScan:
      return "exact-scan";
    case SensitivityMethod::kBruteForce:
      return "brute-force";
  }
  return "unknown";
}

std::optional<LocalMethod> ParseLocalMethod(std::string_view name) {
  if (name == "analytic-paper") return LocalMethod::kAnalyticPaper;
  if (name == "exact-scan") return LocalMethod::kExactScan;
  return std::nullopt;
}

double GlobalSensitivity(const Universe& universe, QueryKind query) {
  const double r = universe.range();
  switch (query) {
    case QueryKind::kCount:
      return 1.0;
    case QueryKind::kMean:
    case QueryKind::kMedian:
      return r / 2.0;
    case QueryKind::kMin:
    case QueryKind::kMax:
      return r;
    case QueryKind::kVariance:
      return (r / 2.0) * (r / 2.0);
  }
  throw DpError(ErrorCode::kInternal, "unreachable query kind");
}

namespace {

// O(1) re-evaluation of one statistic after adding or removing a single
// element, from precomputed aggregates of the base sample. Both local
// engines share this evaluator, so the analytic candidate set is exactly a
// subset of the exact scan in floating point as well as in math.
class IncrementalEval {
 public:
  IncrementalEval(const Sample& sample, QueryKind query)
      : sorted_(sample.sorted_values()),
        query_(query),
        n_(sample.size()),
        nd_(static_cast<double>(sample.size())) {
    if (query_ == QueryKind::kMean || query_ == QueryKind::kVariance) {
      mean_ = stats::Mean(sorted_);
      if (query_ == QueryKind::kVariance) {
        m2_ = stats::SumSquaredDeviations(sorted_, mean_);
      }
    }
    switch (query_) {
      case QueryKind::kCount:
        base_ = nd_;
        break;
      case QueryKind::kMean:
        base_ = mean_;
        break;
      case QueryKind::kMedian:
        base_ = stats::MedianSorted(sorted_);
        break;
      case QueryKind::kMin:
        base_ = sorted_.front();
        break;
      case QueryKind::kMax:
        base_ = sorted_.back();
        break;
      case QueryKind::kVariance:
        base_ = m2_ / nd_;
        break;
    }
  }

  double base() const { return base_; }

  double AfterAdd(double v) const {
    switch (query_) {
      case QueryKind::kCount:
        return nd_ + 1.0;
      case QueryKind::kMean:
        return mean_ + (v - mean_) / (nd_ + 1.0);
      case QueryKind::kMedian:
        return MedianAfterInsert(v);
      case QueryKind::kMin:
        return std::min(v, sorted_.front());
      case QueryKind::kMax:
        return std::max(v, sorted_.back());
      case QueryKind::kVariance: {
        const double d = v - mean_;
        return (m2_ + d * d * nd_ / (nd_ + 1.0)) / (nd_ + 1.0);
      }
    }
    throw DpError(ErrorCode::kInternal, "unreachable query kind");
  }

  // Removes one occurrence of x (which must occur in the sample; n > 1).
  double AfterRemove(double x) const {
    switch (query_) {
      case QueryKind::kCount:
        return nd_ - 1.0;
      case QueryKind::kMean:
        return mean_ - (x - mean_) / (nd_ - 1.0);
      case QueryKind::kMedian:
        return MedianAfterErase(x);
      case QueryKind::kMin:
        return x == sorted_.front() ? sorted_[1] : sorted_.front();
      case QueryKind::kMax:
        return x == sorted_.back() ? sorted_[n_ - 2] : sorted_.back();
      case QueryKind::kVariance: {
        const double d = x - mean_;
        const double m2 = m2_ - d * d * nd_ / (nd_ - 1.0);
        return std::max(0.0, m2 / (nd_ - 1.0));
      }
    }
    throw DpError(ErrorCode::kInternal, "unreachable query kind");
  }

 private:
  double MedianAfterInsert(double v) const {
    const size_t k = static_cast<size_t>(
        std::lower_bound(sorted_.begin(), sorted_.end(), v) -
        sorted_.begin());
    const auto at = [&](size_t i) {
      if (i < k) return sorted_[i];
      if (i == k) return v;
      return sorted_[i - 1];
    };
    const size_t m = n_ + 1;
    if (m % 2 == 1) return at(m / 2);
    return (at(m / 2 - 1) + at(m / 2)) / 2.0;
  }

  double MedianAfterErase(double x) const {
    const size_t j = static_cast<size_t>(
        std::lower_bound(sorted_.begin(), sorted_.end(), x) -
        sorted_.begin());
    const auto at = [&](size_t i) { return i < j ? sorted_[i] : sorted_[i + 1]; };
    const size_t m = n_ - 1;
    if (m % 2 == 1) return at(m / 2);
    return (at(m / 2 - 1) + at(m / 2)) / 2.0;
  }

  const std::vector<double>& sorted_;
  QueryKind query_;
  size_t n_;
  double nd_;
  double mean_ = 0;
  double m2_ = 0;
  double base_ = 0;
};

void ForEachDistinct(const std::vector<double>& sorted,
                     const std::function<void(double)>& fn) {
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1]) continue;
    fn(sorted[i]);
  }
}

}  // namespace

double LocalSensitivity(const Universe& universe, const Sample& sample,
                        QueryKind query, LocalMethod method) {
  // Every neighbor changes a count by exactly one.
  if (query == QueryKind::kCount) return 1.0;

  const IncrementalEval eval(sample, query);
  const double base = eval.base();
  double best = 0.0;
  const auto consider = [&](double neighbor_value) {
    best = std::max(best, std::abs(neighbor_value - base));
  };

  const bool can_remove = sample.size() > 1;
  const double u_min = universe.min_value();
  const double u_max = universe.max_value();
  const double x_min = sample.sorted_values().front();
  const double x_max = sample.sorted_values().back();

  if (method == LocalMethod::kAnalyticPaper) {
    switch (query) {
      case QueryKind::kMean:
      case QueryKind::kMedian:
      case QueryKind::kVariance:
        consider(eval.AfterAdd(u_min));
        consider(eval.AfterAdd(u_max));
        if (can_remove) {
          consider(eval.AfterRemove(x_min));
          consider(eval.AfterRemove(x_max));
        }
        break;
      case QueryKind::kMin:
        consider(eval.AfterAdd(u_min));
        if (can_remove) consider(eval.AfterRemove(x_min));
        break;
      case QueryKind::kMax:
        consider(eval.AfterAdd(u_max));
        if (can_remove) consider(eval.AfterRemove(x_max));
        break;
      case QueryKind::kCount:
        break;
    }
    return best;
  }

  for (double v : universe.distinct_values()) consider(eval.AfterAdd(v));
  if (can_remove) {
    ForEachDistinct(sample.sorted_values(),
                    [&](double x) { consider(eval.AfterRemove(x)); });
  }
  return best;
}

SensitivityPair ComputeSensitivityPair(const Universe& universe,
                                       const Sample& sample, QueryKind query,
                                       LocalMethod method) {
  SensitivityPair pair;
  pair.global_delta_f = GlobalSensitivity(universe, query);
  pair.local_delta_v = LocalSensitivity(universe, sample, query, method);
  pair.method = method == LocalMethod::kAnalyticPaper
                    ? SensitivityMethod::kAnalyticPaper
                    : SensitivityMethod::kExactScan;
  return pair;
}

namespace {

// Non-owning shared_ptr view; brute-force samples never outlive the call.
std::shared_ptr<const Universe> Unowned(const Universe& universe) {
  return std::shared_ptr<const Universe>(std::shared_ptr<void>(), &universe);
}

double MaxNeighborChange(const Universe& universe, const Sample& sample,
                         QueryKind query) {
  const double fx = Evaluate(query, sample);
  double best = 0.0;
  for (double v : universe.distinct_values()) {
    const Sample neighbor = ApplyNeighbor(sample, NeighborOp::AddValue(v));
    best = std::max(best, std::abs(Evaluate(query, neighbor) - fx));
  }
  if (sample.size() > 1) {
    const std::vector<double>& values = sample.values();
    std::vector<double> seen;
    for (size_t i = 0; i < values.size(); ++i) {
      if (std::find(seen.begin(), seen.end(), values[i]) != seen.end()) {
        continue;
      }
      seen.push_back(values[i]);
      const Sample neighbor = ApplyNeighbor(sample, NeighborOp::RemoveIndex(i));
      best = std::max(best, std::abs(Evaluate(query, neighbor) - fx));
    }
  }
  return best;
}

}  // namespace

double BruteForceGlobal(const Universe& universe, QueryKind query,
                        const BruteForceCaps& caps) {
  const std::vector<double>& distinct = universe.distinct_values();
  if (distinct.size() > caps.max_distinct || universe.size() > caps.max_size) {
    throw DpError(ErrorCode::kUniverseTooLarge,
                  "brute-force enumeration refused: universe has " +
                      std::to_string(distinct.size()) + " distinct values / " +
                      std::to_string(universe.size()) + " elements (caps " +
                      std::to_string(caps.max_distinct) + " / " +
                      std::to_string(caps.max_size) + ")");
  }

  // Multiplicity of each distinct value in the universe.
  std::vector<size_t> counts(distinct.size(), 0);
  for (double v : universe.sorted_values()) {
    counts[static_cast<size_t>(
        std::lower_bound(distinct.begin(), distinct.end(), v) -
        distinct.begin())]++;
  }

  const auto universe_view = Unowned(universe);
  double best = 0.0;
  std::vector<double> current;
  current.reserve(universe.size());

  const std::function<void(size_t)> enumerate = [&](size_t i) {
    if (i == distinct.size()) {
      if (current.empty()) return;
      const Sample sample(universe_view, current);
      best = std::max(best, MaxNeighborChange(universe, sample, query));
      return;
    }
    enumerate(i + 1);
    for (size_t m = 1; m <= counts[i]; ++m) {
      current.push_back(distinct[i]);
      enumerate(i + 1);
    }
    current.resize(current.size() - counts[i]);
  };
  enumerate(0);
  return best;
}

double BruteForceLocal(const Universe& universe, const Sample& sample,
                       QueryKind query, size_t max_universe_distinct) {
  if (universe.distinct_values().size() > max_universe_distinct) {
    throw DpError(ErrorCode::kUniverseTooLarge,
                  "brute-force local refused: " +
                      std::to_string(universe.distinct_values().size()) +
                      " distinct add-candidates (cap " +
                      std::to_string(max_universe_distinct) + ")");
  }
  return MaxNeighborChange(universe, sample, query);
}

}  // namespace dpident
