/*
 * Copyright 2026 The noisegauge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef NOISEGAUGE_KNN_H_
#define NOISEGAUGE_KNN_H_

#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "noisegauge/dataset.h"

namespace noisegauge {

// How a tie in the class vote is settled.
enum class TieRule {
  // The tied class owning the nearest of the k neighbors wins.
  kNearestOfTiedClasses,
  // The tied class with the smallest class index wins.
  kLowestClassIndex,
};

std::string_view TieRuleName(TieRule rule);
absl::StatusOr<TieRule> ParseTieRule(std::string_view name);

struct KnnConfig {
  int k = 1;
  TieRule tie_rule = TieRule::kNearestOfTiedClasses;
  // Euclidean distance is the only metric.

  friend bool operator==(const KnnConfig&, const KnnConfig&) = default;
};

// sqrt(sum_i (x_i - y_i)^2). InvalidArgument on dimension mismatch or empty
// vectors.
absl::StatusOr<double> EuclideanDistance(std::span<const double> x,
                                         std::span<const double> y);

// Majority class among the k training records closest to `query`. Equal
// distances are ordered by training-record index, so the result is fully
// deterministic. InvalidArgument if k < 1, k > n, or dimensions differ.
absl::StatusOr<int> Classify(const Dataset& train,
                             std::span<const double> query,
                             const KnnConfig& config);

// Element i is Classify(train, queries.row(i), config).
absl::StatusOr<std::vector<int>> ClassifyBatch(const Dataset& train,
                                               const Dataset& queries,
                                               const KnnConfig& config);
absl::StatusOr<std::vector<int>> ClassifyBatch(
    const Dataset& train, std::span<const double> query_rows,
    const KnnConfig& config);

}  // namespace noisegauge

#endif  // NOISEGAUGE_KNN_H_
