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

#ifndef NOISEGAUGE_RNG_H_
#define NOISEGAUGE_RNG_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>

namespace noisegauge {

// Seeded random stream whose every output is fully specified, so a seed
// reproduces bit-identical values on any platform with IEEE doubles.
//
// The engine is std::mt19937_64 (its output sequence is fixed by the
// standard). Distributions are implemented here rather than taken from
// <random>, whose algorithms are implementation-defined:
//   - Uniform01: top 53 bits of one engine word, scaled by 2^-53.
//   - UniformBelow: rejection sampling on the low end of the 64-bit range.
//   - StandardNormal: Marsaglia polar method; the second value of each
//     accepted pair is cached and returned by the next call.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform double in [0, 1).
  double Uniform01();

  // Uniform integer in [0, bound). bound must be > 0.
  uint64_t UniformBelow(uint64_t bound);

  // Standard normal variate N(0, 1).
  double StandardNormal();

  // Fisher-Yates shuffle, drawing j from [0, i] for i = n-1 down to 1.
  template <typename T>
  void Shuffle(std::span<T> values) {
    for (size_t i = values.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(UniformBelow(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

}  // namespace noisegauge

#endif  // NOISEGAUGE_RNG_H_
