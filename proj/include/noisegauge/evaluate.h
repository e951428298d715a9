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

#ifndef NOISEGAUGE_EVALUATE_H_
#define NOISEGAUGE_EVALUATE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "noisegauge/dataset.h"
#include "noisegauge/knn.h"
#include "noisegauge/noise.h"

namespace noisegauge {

// Fraction of positions where prediction != truth. InvalidArgument on
// length mismatch or empty input.
absl::StatusOr<double> ClassificationError(std::span<const int> predictions,
                                           std::span<const int> truths);

struct CvConfig {
  KnnConfig knn;
  int fold_count = 10;
  uint64_t seed = 0;
  bool stratified = true;

  friend bool operator==(const CvConfig&, const CvConfig&) = default;
};

struct CvResult {
  FoldAssignment folds;
  // One per record, in original record order.
  std::vector<int> predictions;
  int64_t misclassified = 0;
  // misclassified / n over pooled predictions.
  double overall_error = 0.0;
  // misclassified-in-fold / fold size.
  std::vector<double> per_fold_error;
  // confusion[truth][predicted].
  std::vector<std::vector<int64_t>> confusion;

  friend bool operator==(const CvResult&, const CvResult&) = default;
};

// Each fold is classified against the union of the other folds.
absl::StatusOr<CvResult> CrossValidate(const Dataset& data,
                                       const CvConfig& config);

// Which features the held-out fold is classified with.
enum class TestSource {
  kPrivatized,  // train and test both come from the privatized data
  kOriginal,    // privatized training folds, original test rows
};

// CrossValidate(Privatize(data, noise), config) for kPrivatized. Noise is
// drawn once, before folding.
absl::StatusOr<CvResult> PipelineEvaluate(
    const Dataset& data, const NoiseParams& noise, const CvConfig& config,
    TestSource test_source = TestSource::kPrivatized);

}  // namespace noisegauge

#endif  // NOISEGAUGE_EVALUATE_H_
