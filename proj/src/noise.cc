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

#include "noisegauge/noise.h"

#include <fmt/format.h>

#include <cmath>

namespace noisegauge {

std::string_view NoiseModeName(NoiseMode mode) {
  switch (mode) {
    case NoiseMode::kFixed:
      return "fixed";
    case NoiseMode::kAttributeScaled:
      return "attribute-scaled";
  }
  return "unknown";
}

absl::StatusOr<NoiseMode> ParseNoiseMode(std::string_view name) {
  if (name == "fixed") return NoiseMode::kFixed;
  if (name == "attribute-scaled" || name == "scaled") {
    return NoiseMode::kAttributeScaled;
  }
  return absl::InvalidArgumentError(fmt::format(
      "unknown noise mode '{}' (expected fixed or attribute-scaled)", name));
}

absl::Status ValidateNoiseParams(const NoiseParams& params) {
  if (!std::isfinite(params.mean) || !std::isfinite(params.stddev)) {
    return absl::InvalidArgumentError("noise mean and std must be finite");
  }
  if (params.stddev < 0) {
    return absl::InvalidArgumentError(
        fmt::format("noise std must be >= 0, got {}", params.stddev));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<double>> SampleGaussian(Rng& stream, double mean,
                                                   double stddev,
                                                   size_t count) {
  if (!(stddev >= 0) || !std::isfinite(stddev) || !std::isfinite(mean)) {
    return absl::InvalidArgumentError(
        fmt::format("gaussian needs finite mean and std >= 0, got N({}, {}^2)",
                    mean, stddev));
  }
  std::vector<double> out(count);
  for (double& v : out) v = mean + stddev * stream.StandardNormal();
  return out;
}

absl::StatusOr<Dataset> Privatize(const Dataset& data,
                                  const NoiseParams& params) {
  if (auto s = ValidateNoiseParams(params); !s.ok()) return s;

  const size_t d = data.num_attributes();
  std::vector<double> cell_mean(d, params.mean);
  std::vector<double> cell_std(d, params.stddev);
  if (params.mode == NoiseMode::kAttributeScaled) {
    const AttributeStats stats = ComputeAttributeStats(data);
    for (size_t j = 0; j < d; ++j) {
      cell_mean[j] = params.mean * stats.mean[j];
      cell_std[j] = params.stddev * stats.stddev[j];
    }
  }

  Rng stream(params.seed);
  std::vector<double> z(data.features().begin(), data.features().end());
  for (size_t i = 0; i < data.num_records(); ++i) {
    for (size_t j = 0; j < d; ++j) {
      const double e = cell_mean[j] + cell_std[j] * stream.StandardNormal();
      if (e != 0.0) z[i * d + j] += e;
    }
  }
  return data.WithFeatures(std::move(z));
}

std::string FormatNoiseParams(const NoiseParams& params) {
  return fmt::format("mode={}\nmean={}\nstd={}\nseed={}\n",
                     NoiseModeName(params.mode), FormatDouble(params.mean),
                     FormatDouble(params.stddev), params.seed);
}

absl::StatusOr<NoiseParams> ParseNoiseParams(const KeyValueConfig& config) {
  if (auto s = config.CheckKeys({"mode", "mean", "std", "seed"}); !s.ok()) {
    return s;
  }
  NoiseParams p;
  if (const std::string* v = config.Find("mode")) {
    auto mode = ParseNoiseMode(*v);
    if (!mode.ok()) return mode.status();
    p.mode = *mode;
  }
  // Attribute-scaled multipliers default to (1, 1).
  if (p.mode == NoiseMode::kAttributeScaled) p.mean = p.stddev = 1.0;
  if (const std::string* v = config.Find("mean")) {
    auto x = ParseFiniteDouble(*v);
    if (!x.ok()) return x.status();
    p.mean = *x;
  }
  if (const std::string* v = config.Find("std")) {
    auto x = ParseFiniteDouble(*v);
    if (!x.ok()) return x.status();
    p.stddev = *x;
  }
  if (const std::string* v = config.Find("seed")) {
    auto x = ParseUint(*v);
    if (!x.ok()) return x.status();
    p.seed = *x;
  }
  if (auto s = ValidateNoiseParams(p); !s.ok()) return s;
  return p;
}

}  // namespace noisegauge
