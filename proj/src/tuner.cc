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

#include "noisegauge/tuner.h"

#include <fmt/format.h>

#include <cmath>

namespace noisegauge {

std::string_view ScheduleName(Schedule s) {
  return s == Schedule::kMultiplicative ? "multiplicative" : "explicit";
}

std::string_view SeedPolicyName(SeedPolicy p) {
  return p == SeedPolicy::kFixed ? "fixed" : "fresh";
}

std::string_view TuneOutcomeName(TuneOutcome o) {
  return o == TuneOutcome::kMetThreshold ? "met-threshold" : "budget-exhausted";
}

absl::Status ValidateTuneConfig(const TuneConfig& config) {
  if (!(config.error_threshold >= 0.0 && config.error_threshold <= 1.0)) {
    return absl::InvalidArgumentError(fmt::format(
        "error threshold must be in [0, 1], got {}", config.error_threshold));
  }
  if (config.max_iterations < 1) {
    return absl::InvalidArgumentError(fmt::format(
        "max_iterations must be >= 1, got {}", config.max_iterations));
  }
  if (config.cv.knn.k < 1) {
    return absl::InvalidArgumentError("k must be >= 1");
  }
  if (config.cv.fold_count < 2) {
    return absl::InvalidArgumentError("fold count must be >= 2");
  }
  switch (config.schedule) {
    case Schedule::kMultiplicative:
      if (!(config.decay > 0.0 && config.decay < 1.0)) {
        return absl::InvalidArgumentError(fmt::format(
            "decay factor must be in (0, 1), got {}", config.decay));
      }
      if (auto s = ValidateNoiseParams(config.initial); !s.ok()) return s;
      if (!(config.initial.stddev > 0.0)) {
        return absl::InvalidArgumentError(
            "multiplicative schedule needs an initial std > 0");
      }
      break;
    case Schedule::kExplicit:
      if (config.steps.empty()) {
        return absl::InvalidArgumentError("explicit schedule has no steps");
      }
      for (const NoiseParams& p : config.steps) {
        if (auto s = ValidateNoiseParams(p); !s.ok()) return s;
      }
      break;
  }
  return absl::OkStatus();
}

absl::StatusOr<TuneTrace> Tune(const Dataset& data, const TuneConfig& config) {
  if (auto s = ValidateTuneConfig(config); !s.ok()) return s;
  if (auto folds = SplitFolds(data, config.cv.fold_count, config.cv.seed,
                              config.cv.stratified);
      !folds.ok()) {
    return folds.status();
  }

  const int budget = config.schedule == Schedule::kExplicit
                         ? std::min<int>(config.max_iterations,
                                         static_cast<int>(config.steps.size()))
                         : config.max_iterations;

  TuneTrace trace;
  NoiseParams params = config.schedule == Schedule::kExplicit
                           ? config.steps.front()
                           : config.initial;
  for (int i = 0; i < budget; ++i) {
    if (i > 0) {
      if (config.schedule == Schedule::kExplicit) {
        params = config.steps[i];
      } else {
        params.stddev = config.decay * params.stddev;
      }
    }
    const uint64_t seed = config.seed_policy == SeedPolicy::kFixed
                              ? config.cv.seed
                              : config.cv.seed + static_cast<uint64_t>(i);
    params.seed = seed;
    CvConfig cv = config.cv;
    cv.seed = seed;

    auto result = PipelineEvaluate(data, params, cv);
    if (!result.ok()) return result.status();
    trace.steps.push_back(
        {params, result->overall_error, result->misclassified});
    if (result->overall_error <= config.error_threshold) {
      trace.outcome = TuneOutcome::kMetThreshold;
      trace.accepted = params;
      return trace;
    }
  }
  trace.outcome = TuneOutcome::kBudgetExhausted;
  return trace;
}

namespace {

absl::StatusOr<bool> ParseBool(std::string_view s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  return absl::InvalidArgumentError(fmt::format("not a boolean: '{}'", s));
}

absl::StatusOr<NoiseParams> ParseStep(std::string_view s) {
  std::vector<std::string_view> parts = Split(s, ':');
  if (parts.size() != 3) {
    return absl::InvalidArgumentError(
        fmt::format("step '{}' is not mode:mean:std", s));
  }
  NoiseParams p;
  auto mode = ParseNoiseMode(parts[0]);
  if (!mode.ok()) return mode.status();
  auto mean = ParseFiniteDouble(parts[1]);
  if (!mean.ok()) return mean.status();
  auto stddev = ParseFiniteDouble(parts[2]);
  if (!stddev.ok()) return stddev.status();
  p.mode = *mode;
  p.mean = *mean;
  p.stddev = *stddev;
  return p;
}

}  // namespace

absl::StatusOr<TuneConfig> ParseTuneConfig(const KeyValueConfig& kv) {
  if (auto s = kv.CheckKeys({"threshold", "schedule", "decay", "max_iterations",
                             "mode", "mean", "std", "step", "k", "tie_rule",
                             "folds", "stratified", "seed", "seed_policy"});
      !s.ok()) {
    return s;
  }
  TuneConfig cfg;
  absl::Status status;
  auto number = [&](std::string_view key, double& out) {
    if (const std::string* v = kv.Find(key); v && status.ok()) {
      auto x = ParseFiniteDouble(*v);
      if (x.ok()) {
        out = *x;
      } else {
        status = x.status();
      }
    }
  };
  auto integer = [&](std::string_view key, int& out) {
    if (const std::string* v = kv.Find(key); v && status.ok()) {
      auto x = ParseInt(*v);
      if (x.ok()) {
        out = static_cast<int>(*x);
      } else {
        status = x.status();
      }
    }
  };

  if (!kv.Has("threshold")) {
    return absl::InvalidArgumentError("tune config needs 'threshold'");
  }
  number("threshold", cfg.error_threshold);
  if (const std::string* v = kv.Find("schedule")) {
    if (*v == "multiplicative") {
      cfg.schedule = Schedule::kMultiplicative;
    } else if (*v == "explicit") {
      cfg.schedule = Schedule::kExplicit;
    } else {
      return absl::InvalidArgumentError(
          fmt::format("unknown schedule '{}'", *v));
    }
  }
  number("decay", cfg.decay);
  integer("max_iterations", cfg.max_iterations);
  if (const std::string* v = kv.Find("mode")) {
    auto mode = ParseNoiseMode(*v);
    if (!mode.ok()) return mode.status();
    cfg.initial.mode = *mode;
    if (*mode == NoiseMode::kAttributeScaled) {
      cfg.initial.mean = cfg.initial.stddev = 1.0;
    }
  }
  number("mean", cfg.initial.mean);
  number("std", cfg.initial.stddev);
  for (const std::string& s : kv.All("step")) {
    auto step = ParseStep(s);
    if (!step.ok()) return step.status();
    cfg.steps.push_back(*step);
  }
  integer("k", cfg.cv.knn.k);
  if (const std::string* v = kv.Find("tie_rule")) {
    auto rule = ParseTieRule(*v);
    if (!rule.ok()) return rule.status();
    cfg.cv.knn.tie_rule = *rule;
  }
  integer("folds", cfg.cv.fold_count);
  if (const std::string* v = kv.Find("stratified")) {
    auto b = ParseBool(*v);
    if (!b.ok()) return b.status();
    cfg.cv.stratified = *b;
  }
  if (const std::string* v = kv.Find("seed")) {
    auto x = ParseUint(*v);
    if (!x.ok()) return x.status();
    cfg.cv.seed = *x;
  }
  if (const std::string* v = kv.Find("seed_policy")) {
    if (*v == "fixed") {
      cfg.seed_policy = SeedPolicy::kFixed;
    } else if (*v == "fresh") {
      cfg.seed_policy = SeedPolicy::kFreshPerStep;
    } else {
      return absl::InvalidArgumentError(
          fmt::format("unknown seed policy '{}'", *v));
    }
  }
  if (!status.ok()) return status;
  if (auto s = ValidateTuneConfig(cfg); !s.ok()) return s;
  return cfg;
}

}  // namespace noisegauge
