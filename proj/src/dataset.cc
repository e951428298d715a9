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

#include "noisegauge/dataset.h"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <string_view>

#include "noisegauge/kv_config.h"
#include "noisegauge/rng.h"

namespace noisegauge {

absl::StatusOr<Dataset> Dataset::Create(
    std::vector<double> features, size_t num_attributes,
    std::vector<int> labels, std::vector<std::string> attribute_names,
    std::vector<std::string> class_names) {
  if (num_attributes == 0) {
    return absl::InvalidArgumentError("dataset needs at least one attribute");
  }
  if (labels.empty()) {
    return absl::InvalidArgumentError("dataset needs at least one record");
  }
  if (features.size() != labels.size() * num_attributes) {
    return absl::InvalidArgumentError(
        fmt::format("feature matrix has {} values, expected {} x {}",
                    features.size(), labels.size(), num_attributes));
  }
  if (attribute_names.size() != num_attributes) {
    return absl::InvalidArgumentError(
        fmt::format("expected {} attribute names, got {}", num_attributes,
                    attribute_names.size()));
  }
  for (size_t i = 0; i < features.size(); ++i) {
    if (!std::isfinite(features[i])) {
      return absl::InvalidArgumentError(
          fmt::format("non-finite feature at record {}, attribute {}",
                      i / num_attributes, i % num_attributes));
    }
  }
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || static_cast<size_t>(labels[i]) >= class_names.size()) {
      return absl::InvalidArgumentError(
          fmt::format("record {} has unknown class index {}", i, labels[i]));
    }
  }
  Dataset d;
  d.features_ = std::move(features);
  d.num_attributes_ = num_attributes;
  d.labels_ = std::move(labels);
  d.attribute_names_ = std::move(attribute_names);
  d.class_names_ = std::move(class_names);
  return d;
}

Dataset Dataset::Subset(std::span<const size_t> indices) const {
  Dataset d;
  d.num_attributes_ = num_attributes_;
  d.attribute_names_ = attribute_names_;
  d.class_names_ = class_names_;
  d.features_.reserve(indices.size() * num_attributes_);
  d.labels_.reserve(indices.size());
  for (size_t i : indices) {
    auto r = row(i);
    d.features_.insert(d.features_.end(), r.begin(), r.end());
    d.labels_.push_back(labels_[i]);
  }
  return d;
}

absl::StatusOr<Dataset> Dataset::WithFeatures(
    std::vector<double> features) const {
  return Create(std::move(features), num_attributes_, labels_, attribute_names_,
                class_names_);
}

namespace {

bool ParseDouble(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

}  // namespace

absl::StatusOr<Dataset> LoadCsv(std::istream& in, const CsvSchema& schema) {
  std::vector<double> features;
  std::vector<int> labels;
  std::vector<std::string> attribute_names;
  std::vector<std::string> class_names;
  std::map<std::string, int, std::less<>> class_index;

  size_t columns = 0;
  size_t label_col = 0;
  bool header_pending = schema.has_header;
  std::string line;
  size_t line_no = 0;

  auto resolve_columns = [&](size_t n) -> absl::Status {
    if (n < 2) {
      return absl::DataLossError(fmt::format(
          "line {}: need at least one feature and a label column", line_no));
    }
    const long lc = schema.label_column < 0
                        ? static_cast<long>(n) + schema.label_column
                        : schema.label_column;
    if (lc < 0 || lc >= static_cast<long>(n)) {
      return absl::InvalidArgumentError(fmt::format(
          "label column {} outside {} columns", schema.label_column, n));
    }
    columns = n;
    label_col = static_cast<size_t>(lc);
    return absl::OkStatus();
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::vector<std::string_view> cells = Split(line, schema.delimiter);
    for (auto& c : cells) c = Trim(c);

    if (columns == 0) {
      if (auto s = resolve_columns(cells.size()); !s.ok()) return s;
    } else if (cells.size() != columns) {
      return absl::DataLossError(
          fmt::format("line {}: expected {} columns, found {}", line_no,
                      columns, cells.size()));
    }

    if (header_pending) {
      header_pending = false;
      for (size_t c = 0; c < cells.size(); ++c) {
        if (c != label_col) attribute_names.emplace_back(cells[c]);
      }
      continue;
    }

    for (size_t c = 0; c < cells.size(); ++c) {
      if (c == label_col) continue;
      double v;
      if (!ParseDouble(cells[c], v)) {
        return absl::DataLossError(
            fmt::format("line {}, column {}: non-numeric value '{}'", line_no,
                        c + 1, cells[c]));
      }
      features.push_back(v);
    }
    const std::string_view name = cells[label_col];
    if (name.empty()) {
      return absl::DataLossError(fmt::format("line {}: empty label", line_no));
    }
    auto it = class_index.find(name);
    if (it == class_index.end()) {
      it = class_index
               .emplace(std::string(name), static_cast<int>(class_names.size()))
               .first;
      class_names.emplace_back(name);
    }
    labels.push_back(it->second);
  }

  if (labels.empty()) {
    return absl::FailedPreconditionError("empty input: no data records");
  }
  const size_t d = columns - 1;
  if (attribute_names.empty()) {
    for (size_t j = 0; j < d; ++j) {
      attribute_names.push_back(fmt::format("attribute_{}", j + 1));
    }
  }
  return Dataset::Create(std::move(features), d, std::move(labels),
                         std::move(attribute_names), std::move(class_names));
}

absl::StatusOr<Dataset> LoadCsvFile(const std::string& path,
                                    const CsvSchema& schema) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(fmt::format("cannot open {}", path));
  auto data = LoadCsv(in, schema);
  if (!data.ok()) {
    return absl::Status(
        data.status().code(),
        fmt::format("{}: {}", path, std::string(data.status().message())));
  }
  return data;
}

void WriteCsv(const Dataset& data, std::ostream& out, const CsvSchema& schema) {
  const size_t d = data.num_attributes();
  const size_t columns = d + 1;
  const size_t label_col =
      schema.label_column < 0 ? static_cast<size_t>(static_cast<long>(columns) +
                                                    schema.label_column)
                              : static_cast<size_t>(schema.label_column);

  auto write_row = [&](auto&& cell) {
    for (size_t c = 0, j = 0; c < columns; ++c) {
      if (c > 0) out << schema.delimiter;
      if (c == label_col) {
        cell(-1);
      } else {
        cell(static_cast<long>(j++));
      }
    }
    out << '\n';
  };

  if (schema.has_header) {
    write_row([&](long j) {
      out << (j < 0 ? std::string("class") : data.attribute_names()[j]);
    });
  }
  for (size_t i = 0; i < data.num_records(); ++i) {
    write_row([&](long j) {
      if (j < 0) {
        out << data.class_names()[data.label(i)];
      } else {
        out << FormatDouble(data.at(i, static_cast<size_t>(j)));
      }
    });
  }
}

AttributeStats ComputeAttributeStats(const Dataset& data,
                                     StdConvention convention) {
  const size_t n = data.num_records();
  const size_t d = data.num_attributes();
  AttributeStats stats;
  stats.mean.assign(d, 0.0);
  stats.stddev.assign(d, 0.0);
  std::vector<double> m2(d, 0.0);
  for (size_t i = 0; i < n; ++i) {
    const double count = static_cast<double>(i + 1);
    for (size_t j = 0; j < d; ++j) {
      const double x = data.at(i, j);
      const double delta = x - stats.mean[j];
      stats.mean[j] += delta / count;
      m2[j] += delta * (x - stats.mean[j]);
    }
  }
  const double divisor = convention == StdConvention::kPopulation
                             ? static_cast<double>(n)
                             : static_cast<double>(n) - 1.0;
  for (size_t j = 0; j < d; ++j) {
    stats.stddev[j] =
        divisor > 0 ? std::sqrt(std::max(0.0, m2[j]) / divisor) : 0.0;
  }
  return stats;
}

std::vector<size_t> FoldAssignment::Members(int fold) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < fold_of.size(); ++i) {
    if (fold_of[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<size_t> FoldAssignment::NonMembers(int fold) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < fold_of.size(); ++i) {
    if (fold_of[i] != fold) out.push_back(i);
  }
  return out;
}

absl::StatusOr<FoldAssignment> SplitFolds(const Dataset& data, int fold_count,
                                          uint64_t seed, bool stratified) {
  const size_t n = data.num_records();
  if (fold_count < 2 || static_cast<size_t>(fold_count) > n) {
    return absl::InvalidArgumentError(
        fmt::format("fold count {} must be in [2, {}]", fold_count, n));
  }

  // Groups to deal: one per class when stratified, otherwise all records.
  std::vector<std::vector<size_t>> groups;
  if (stratified) {
    groups.resize(data.num_classes());
    for (size_t i = 0; i < n; ++i) groups[data.label(i)].push_back(i);
    std::erase_if(groups, [](const auto& g) { return g.empty(); });
    for (const auto& g : groups) {
      if (g.size() < static_cast<size_t>(fold_count)) {
        return absl::InvalidArgumentError(fmt::format(
            "stratified fold count {} exceeds smallest class size {}",
            fold_count, g.size()));
      }
    }
  } else {
    groups.emplace_back(n);
    for (size_t i = 0; i < n; ++i) groups[0][i] = i;
  }

  Rng rng(seed);
  FoldAssignment out;
  out.fold_count = fold_count;
  out.fold_of.assign(n, 0);
  size_t cursor = 0;
  for (auto& g : groups) {
    rng.Shuffle(std::span<size_t>(g));
    for (size_t idx : g) {
      out.fold_of[idx] = static_cast<int>(cursor % fold_count);
      ++cursor;
    }
  }
  return out;
}

}  // namespace noisegauge
