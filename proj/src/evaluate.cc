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

#include "noisegauge/evaluate.h"

#include <fmt/format.h>

namespace noisegauge {

absl::StatusOr<double> ClassificationError(std::span<const int> predictions,
                                           std::span<const int> truths) {
  if (predictions.size() != truths.size()) {
    return absl::InvalidArgumentError(
        fmt::format("prediction count {} differs from truth count {}",
                    predictions.size(), truths.size()));
  }
  if (truths.empty()) {
    return absl::FailedPreconditionError("classification error of empty lists");
  }
  size_t wrong = 0;
  for (size_t i = 0; i < truths.size(); ++i) {
    if (predictions[i] != truths[i]) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(truths.size());
}

namespace {

// `test` supplies the held-out features; it has the same records and labels
// as `train_source`.
absl::StatusOr<CvResult> RunFolds(const Dataset& train_source,
                                  const Dataset& test, const CvConfig& config) {
  auto folds = SplitFolds(train_source, config.fold_count, config.seed,
                          config.stratified);
  if (!folds.ok()) return folds.status();

  const size_t n = train_source.num_records();
  const size_t classes = train_source.num_classes();
  CvResult result;
  result.folds = *std::move(folds);
  result.predictions.assign(n, -1);
  result.confusion.assign(classes, std::vector<int64_t>(classes, 0));

  for (int f = 0; f < config.fold_count; ++f) {
    const std::vector<size_t> held_out = result.folds.Members(f);
    const Dataset train = train_source.Subset(result.folds.NonMembers(f));
    const Dataset queries = test.Subset(held_out);
    auto predicted = ClassifyBatch(train, queries, config.knn);
    if (!predicted.ok()) return predicted.status();

    int64_t wrong = 0;
    for (size_t r = 0; r < held_out.size(); ++r) {
      const size_t i = held_out[r];
      const int p = (*predicted)[r];
      result.predictions[i] = p;
      ++result.confusion[train_source.label(i)][p];
      if (p != train_source.label(i)) ++wrong;
    }
    result.misclassified += wrong;
    result.per_fold_error.push_back(static_cast<double>(wrong) /
                                    static_cast<double>(held_out.size()));
  }
  result.overall_error =
      static_cast<double>(result.misclassified) / static_cast<double>(n);
  return result;
}

}  // namespace

absl::StatusOr<CvResult> CrossValidate(const Dataset& data,
                                       const CvConfig& config) {
  return RunFolds(data, data, config);
}

absl::StatusOr<CvResult> PipelineEvaluate(const Dataset& data,
                                          const NoiseParams& noise,
                                          const CvConfig& config,
                                          TestSource test_source) {
  auto privatized = Privatize(data, noise);
  if (!privatized.ok()) return privatized.status();
  return RunFolds(*privatized,
                  test_source == TestSource::kPrivatized ? *privatized : data,
                  config);
}

}  // namespace noisegauge
