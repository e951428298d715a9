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

#include "noisegauge/report.h"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>

#include "noisegauge/kv_config.h"

namespace noisegauge {

absl::StatusOr<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "human") return ReportFormat::kHuman;
  if (name == "kv" || name == "machine") return ReportFormat::kMachine;
  return absl::InvalidArgumentError(
      fmt::format("unknown report format '{}' (expected human or kv)", name));
}

namespace {

std::string Pad(std::string_view s, size_t width) {
  std::string out(s);
  if (out.size() < width) out.append(width - out.size(), ' ');
  return out;
}

std::string RenderMachine(const Report& r) {
  std::string out = fmt::format("format_version={}\nreport={}\n",
                                kReportFormatVersion, r.kind());
  for (const auto& [k, v] : r.entries()) out += fmt::format("{}={}\n", k, v);
  for (const Table& t : r.tables()) {
    out +=
        fmt::format("table.{}.columns={}\n", t.name, fmt::join(t.columns, ","));
    for (size_t i = 0; i < t.rows.size(); ++i) {
      out += fmt::format("table.{}.row.{}={}\n", t.name, i,
                         fmt::join(t.rows[i], ","));
    }
  }
  return out;
}

std::string RenderHuman(const Report& r) {
  std::string out = fmt::format("# noisegauge {} report (format {})\n",
                                r.kind(), kReportFormatVersion);
  size_t key_width = 0;
  for (const auto& [k, v] : r.entries())
    key_width = std::max(key_width, k.size());
  for (const auto& [k, v] : r.entries()) {
    out += fmt::format("{}  {}\n", Pad(k, key_width), v);
  }
  for (const Table& t : r.tables()) {
    std::vector<size_t> width(t.columns.size(), 0);
    for (size_t c = 0; c < t.columns.size(); ++c)
      width[c] = t.columns[c].size();
    for (const auto& row : t.rows) {
      for (size_t c = 0; c < row.size() && c < width.size(); ++c) {
        width[c] = std::max(width[c], row[c].size());
      }
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (size_t c = 0; c < cells.size(); ++c) {
        if (c > 0) s += "  ";
        s += c + 1 == cells.size() ? cells[c] : Pad(cells[c], width[c]);
      }
      return s + "\n";
    };
    out += fmt::format("\n[{}]\n{}", t.name, line(t.columns));
    for (const auto& row : t.rows) out += line(row);
  }
  return out;
}

}  // namespace

std::string Report::Render(ReportFormat format) const {
  return format == ReportFormat::kMachine ? RenderMachine(*this)
                                          : RenderHuman(*this);
}

void AppendNoiseParams(Report& report, std::string_view prefix,
                       const NoiseParams& params) {
  report.Set(fmt::format("{}mode", prefix),
             std::string(NoiseModeName(params.mode)));
  report.Set(fmt::format("{}mean", prefix), FormatDouble(params.mean));
  report.Set(fmt::format("{}std", prefix), FormatDouble(params.stddev));
  report.Set(fmt::format("{}seed", prefix), fmt::format("{}", params.seed));
}

void AppendCvConfig(Report& report, std::string_view prefix,
                    const CvConfig& config) {
  report.Set(fmt::format("{}k", prefix), fmt::format("{}", config.knn.k));
  report.Set(fmt::format("{}tie_rule", prefix),
             std::string(TieRuleName(config.knn.tie_rule)));
  report.Set(fmt::format("{}distance", prefix), "euclidean");
  report.Set(fmt::format("{}folds", prefix),
             fmt::format("{}", config.fold_count));
  report.Set(fmt::format("{}stratified", prefix),
             config.stratified ? "true" : "false");
}

void AppendCvResult(Report& report, std::string_view prefix,
                    const CvResult& result, const Dataset& data) {
  report.Set(fmt::format("{}records", prefix),
             fmt::format("{}", result.predictions.size()));
  report.Set(fmt::format("{}misclassified", prefix),
             fmt::format("{}", result.misclassified));
  report.Set(fmt::format("{}overall_error", prefix),
             FormatDouble(result.overall_error));

  Table folds{fmt::format("{}folds", prefix), {"fold", "size", "error"}, {}};
  for (int f = 0; f < result.folds.fold_count; ++f) {
    const auto size =
        std::count(result.folds.fold_of.begin(), result.folds.fold_of.end(), f);
    folds.rows.push_back({fmt::format("{}", f), fmt::format("{}", size),
                          FormatDouble(result.per_fold_error[f])});
  }
  report.AddTable(std::move(folds));

  Table confusion{fmt::format("{}confusion", prefix), {"truth"}, {}};
  for (const auto& name : data.class_names()) confusion.columns.push_back(name);
  for (size_t t = 0; t < result.confusion.size(); ++t) {
    std::vector<std::string> row{data.class_names()[t]};
    for (int64_t c : result.confusion[t]) row.push_back(fmt::format("{}", c));
    confusion.rows.push_back(std::move(row));
  }
  report.AddTable(std::move(confusion));
}

void AppendTuneTrace(Report& report, const TuneTrace& trace,
                     double error_threshold) {
  report.Set("result.steps", fmt::format("{}", trace.steps.size()));
  report.Set("result.outcome", std::string(TuneOutcomeName(trace.outcome)));
  if (trace.accepted)
    AppendNoiseParams(report, "result.accepted.", *trace.accepted);

  Table steps{"steps",
              {"step", "mode", "mean", "std", "seed", "error", "decision"},
              {}};
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const TuneStep& s = trace.steps[i];
    steps.rows.push_back(
        {fmt::format("{}", i + 1), std::string(NoiseModeName(s.params.mode)),
         FormatDouble(s.params.mean), FormatDouble(s.params.stddev),
         fmt::format("{}", s.params.seed), FormatDouble(s.error),
         s.error <= error_threshold ? "accept" : "adjust"});
  }
  report.AddTable(std::move(steps));
}

}  // namespace noisegauge
