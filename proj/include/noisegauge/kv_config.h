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

#ifndef NOISEGAUGE_KV_CONFIG_H_
#define NOISEGAUGE_KV_CONFIG_H_

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace noisegauge {

// Shortest decimal that round-trips to the same double.
std::string FormatDouble(double v);

std::string_view Trim(std::string_view s);
// Splits on every occurrence of `sep`; empty fields are kept.
std::vector<std::string_view> Split(std::string_view s, char sep);

absl::StatusOr<double> ParseFiniteDouble(std::string_view s);
absl::StatusOr<int64_t> ParseInt(std::string_view s);
absl::StatusOr<uint64_t> ParseUint(std::string_view s);

// Line-oriented `key=value` text. Blank lines and lines starting with '#'
// are ignored; surrounding whitespace is trimmed. Keys may repeat, and
// entries keep file order.
class KeyValueConfig {
 public:
  static absl::StatusOr<KeyValueConfig> Parse(std::istream& in);
  static absl::StatusOr<KeyValueConfig> Parse(std::string_view text);
  static absl::StatusOr<KeyValueConfig> ParseFile(const std::string& path);

  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }
  bool Has(std::string_view key) const;
  // Last value for `key`, or nullptr.
  const std::string* Find(std::string_view key) const;
  std::vector<std::string> All(std::string_view key) const;

  // Fails with InvalidArgument naming any key outside `known`.
  absl::Status CheckKeys(const std::vector<std::string_view>& known) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace noisegauge

#endif  // NOISEGAUGE_KV_CONFIG_H_
