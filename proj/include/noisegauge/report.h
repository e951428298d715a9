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

#ifndef NOISEGAUGE_REPORT_H_
#define NOISEGAUGE_REPORT_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "noisegauge/dataset.h"
#include "noisegauge/evaluate.h"
#include "noisegauge/tuner.h"

namespace noisegauge {

inline constexpr int kReportFormatVersion = 1;

enum class ReportFormat {
  kHuman,    // aligned tables
  kMachine,  // line-oriented key=value
};

absl::StatusOr<ReportFormat> ParseReportFormat(std::string_view name);

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// Ordered key/value entries plus named tables. Rendering is a pure function
// of the contents, so equal reports are byte-identical.
//
// Machine layout:
//   format_version=1
//   report=<kind>
//   <key>=<value>                          (insertion order)
//   table.<name>.columns=<c1>,<c2>,...
//   table.<name>.row.<i>=<v1>,<v2>,...
class Report {
 public:
  explicit Report(std::string kind) : kind_(std::move(kind)) {}

  void Set(std::string key, std::string value) {
    entries_.emplace_back(std::move(key), std::move(value));
  }
  void AddTable(Table table) { tables_.push_back(std::move(table)); }

  const std::string& kind() const { return kind_; }
  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }
  const std::vector<Table>& tables() const { return tables_; }

  std::string Render(ReportFormat format) const;

 private:
  std::string kind_;
  std::vector<std::pair<std::string, std::string>> entries_;
  std::vector<Table> tables_;
};

void AppendNoiseParams(Report& report, std::string_view prefix,
                       const NoiseParams& params);
void AppendCvConfig(Report& report, std::string_view prefix,
                    const CvConfig& config);

// Error totals, a per-fold table and a confusion table (rows are true
// classes). Table names and keys are prefixed with `prefix`.
void AppendCvResult(Report& report, std::string_view prefix,
                    const CvResult& result, const Dataset& data);

// One row per step: step, mode, mean, std, seed, error, decision.
void AppendTuneTrace(Report& report, const TuneTrace& trace,
                     double error_threshold);

}  // namespace noisegauge

#endif  // NOISEGAUGE_REPORT_H_
