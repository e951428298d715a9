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

#include "noisegauge/knn.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <utility>

namespace noisegauge {

std::string_view TieRuleName(TieRule rule) {
  switch (rule) {
    case TieRule::kNearestOfTiedClasses:
      return "nearest";
    case TieRule::kLowestClassIndex:
      return "lowest-index";
  }
  return "unknown";
}

absl::StatusOr<TieRule> ParseTieRule(std::string_view name) {
  if (name == "nearest") return TieRule::kNearestOfTiedClasses;
  if (name == "lowest-index") return TieRule::kLowestClassIndex;
  return absl::InvalidArgumentError(fmt::format(
      "unknown tie rule '{}' (expected nearest or lowest-index)", name));
}

absl::StatusOr<double> EuclideanDistance(std::span<const double> x,
                                         std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) {
    return absl::InvalidArgumentError(
        fmt::format("distance needs equal non-zero dimensions, got {} and {}",
                    x.size(), y.size()));
  }
  double sum = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double diff = x[i] - y[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

namespace {

absl::Status CheckShape(const Dataset& train, size_t query_dim,
                        const KnnConfig& config) {
  if (config.k < 1) {
    return absl::InvalidArgumentError(
        fmt::format("k must be >= 1, got {}", config.k));
  }
  if (static_cast<size_t>(config.k) > train.num_records()) {
    return absl::InvalidArgumentError(fmt::format(
        "k = {} exceeds training size {}", config.k, train.num_records()));
  }
  if (query_dim != train.num_attributes()) {
    return absl::InvalidArgumentError(
        fmt::format("query has {} attributes, training set has {}", query_dim,
                    train.num_attributes()));
  }
  return absl::OkStatus();
}

// Shape already checked.
int Vote(const Dataset& train, std::span<const double> query,
         const KnnConfig& config,
         std::vector<std::pair<double, size_t>>& scratch) {
  const size_t n = train.num_records();
  scratch.resize(n);
  for (size_t i = 0; i < n; ++i) {
    scratch[i] = {*EuclideanDistance(train.row(i), query), i};
  }
  const size_t k = static_cast<size_t>(config.k);
  std::partial_sort(scratch.begin(), scratch.begin() + k, scratch.end());

  std::vector<int> votes(train.num_classes(), 0);
  // Rank of each class's nearest neighbor among the k.
  std::vector<size_t> first_rank(train.num_classes(), k);
  for (size_t r = 0; r < k; ++r) {
    const int c = train.label(scratch[r].second);
    ++votes[c];
    first_rank[c] = std::min(first_rank[c], r);
  }
  const int top = *std::max_element(votes.begin(), votes.end());

  int best = -1;
  for (int c = 0; c < static_cast<int>(votes.size()); ++c) {
    if (votes[c] != top) continue;
    if (best < 0) {
      best = c;
    } else if (config.tie_rule == TieRule::kNearestOfTiedClasses &&
               first_rank[c] < first_rank[best]) {
      best = c;
    }
  }
  return best;
}

}  // namespace

absl::StatusOr<int> Classify(const Dataset& train,
                             std::span<const double> query,
                             const KnnConfig& config) {
  if (auto s = CheckShape(train, query.size(), config); !s.ok()) return s;
  std::vector<std::pair<double, size_t>> scratch;
  return Vote(train, query, config, scratch);
}

absl::StatusOr<std::vector<int>> ClassifyBatch(
    const Dataset& train, std::span<const double> query_rows,
    const KnnConfig& config) {
  const size_t d = train.num_attributes();
  if (query_rows.size() % d != 0) {
    return absl::InvalidArgumentError(fmt::format(
        "query buffer of {} values is not a multiple of {} attributes",
        query_rows.size(), d));
  }
  std::vector<int> out;
  if (query_rows.empty()) return out;
  if (auto s = CheckShape(train, d, config); !s.ok()) return s;
  const size_t m = query_rows.size() / d;
  out.reserve(m);
  std::vector<std::pair<double, size_t>> scratch;
  for (size_t i = 0; i < m; ++i) {
    out.push_back(Vote(train, query_rows.subspan(i * d, d), config, scratch));
  }
  return out;
}

absl::StatusOr<std::vector<int>> ClassifyBatch(const Dataset& train,
                                               const Dataset& queries,
                                               const KnnConfig& config) {
  if (queries.num_attributes() != train.num_attributes()) {
    return absl::InvalidArgumentError(
        fmt::format("queries have {} attributes, training set has {}",
                    queries.num_attributes(), train.num_attributes()));
  }
  return ClassifyBatch(train, queries.features(), config);
}

}  // namespace noisegauge
