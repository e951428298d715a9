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

#ifndef NOISEGAUGE_NOISE_H_
#define NOISEGAUGE_NOISE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "noisegauge/dataset.h"
#include "noisegauge/kv_config.h"
#include "noisegauge/rng.h"

namespace noisegauge {

enum class NoiseMode {
  // Every cell receives e ~ N(mean, stddev^2).
  kFixed,
  // Attribute j receives e ~ N(mean * mean_j, (stddev * std_j)^2), where
  // mean_j and std_j are the attribute's population statistics; mean and
  // stddev act as multipliers.
  kAttributeScaled,
};

std::string_view NoiseModeName(NoiseMode mode);
absl::StatusOr<NoiseMode> ParseNoiseMode(std::string_view name);

struct NoiseParams {
  NoiseMode mode = NoiseMode::kFixed;
  double mean = 0.0;
  double stddev = 0.0;
  uint64_t seed = 0;

  friend bool operator==(const NoiseParams&, const NoiseParams&) = default;
};

// InvalidArgument unless mean and stddev are finite and stddev >= 0.
absl::Status ValidateNoiseParams(const NoiseParams& params);

// `count` draws of mean + stddev * z, with z from stream.StandardNormal().
// stddev == 0 yields exact copies of mean.
absl::StatusOr<std::vector<double>> SampleGaussian(Rng& stream, double mean,
                                                   double stddev, size_t count);

// Z = X + e with one independent draw per cell, taken in row-major order
// from a single stream seeded with params.seed. Labels and names are kept.
// A draw that is exactly zero leaves the cell bit-identical.
absl::StatusOr<Dataset> Privatize(const Dataset& data,
                                  const NoiseParams& params);

// Plain-text form: keys mode, mean, std, seed.
std::string FormatNoiseParams(const NoiseParams& params);
absl::StatusOr<NoiseParams> ParseNoiseParams(const KeyValueConfig& config);

}  // namespace noisegauge

#endif  // NOISEGAUGE_NOISE_H_
