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

#ifndef NOISEGAUGE_TUNER_H_
#define NOISEGAUGE_TUNER_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "noisegauge/dataset.h"
#include "noisegauge/evaluate.h"
#include "noisegauge/kv_config.h"
#include "noisegauge/noise.h"

namespace noisegauge {

enum class Schedule {
  // Step i+1 keeps mode and mean and uses stddev = decay * stddev_i.
  kMultiplicative,
  // Steps are taken from TuneConfig::steps in order.
  kExplicit,
};

enum class SeedPolicy {
  kFixed,         // every step uses the base seed
  kFreshPerStep,  // step i (0-based) uses base seed + i
};

std::string_view ScheduleName(Schedule s);
std::string_view SeedPolicyName(SeedPolicy p);

struct TuneConfig {
  double error_threshold = 0.0;
  NoiseParams initial;  // first step of the multiplicative schedule
  Schedule schedule = Schedule::kMultiplicative;
  double decay = 0.5;
  std::vector<NoiseParams> steps;  // explicit schedule
  int max_iterations = 10;
  // cv.seed is the base seed; it seeds both the noise and the folds.
  CvConfig cv;
  SeedPolicy seed_policy = SeedPolicy::kFixed;
};

absl::Status ValidateTuneConfig(const TuneConfig& config);

struct TuneStep {
  NoiseParams params;  // effective, seed included
  double error = 0.0;
  int64_t misclassified = 0;
};

enum class TuneOutcome { kMetThreshold, kBudgetExhausted };
std::string_view TuneOutcomeName(TuneOutcome o);

struct TuneTrace {
  std::vector<TuneStep> steps;
  TuneOutcome outcome = TuneOutcome::kBudgetExhausted;
  std::optional<NoiseParams> accepted;
};

// Privatize, cross-validate, compare with the threshold, adjust, repeat.
// Stops at the first step with error <= threshold or once max_iterations
// steps (or the explicit list) are used up. Invalid configuration fails
// before any evaluation.
absl::StatusOr<TuneTrace> Tune(const Dataset& data, const TuneConfig& config);

// Plain-text TuneConfig. Keys: threshold, schedule, decay, max_iterations,
// mode, mean, std (initial params), step (repeatable, "mode:mean:std"),
// k, tie_rule, folds, stratified, seed, seed_policy.
absl::StatusOr<TuneConfig> ParseTuneConfig(const KeyValueConfig& config);

}  // namespace noisegauge

#endif  // NOISEGAUGE_TUNER_H_
