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

#ifndef NOISEGAUGE_DATASET_H_
#define NOISEGAUGE_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace noisegauge {

// Numeric feature matrix (row-major, n records x d attributes) with one
// categorical label per record. Labels are stored as indices into
// class_names(); class order is order of first appearance when loaded.
//
// Instances are immutable once created and always satisfy:
//   n >= 1, d >= 1, every feature finite, labels.size() == n,
//   every label a valid class index, attribute_names.size() == d.
class Dataset {
 public:
  static absl::StatusOr<Dataset> Create(
      std::vector<double> features, size_t num_attributes,
      std::vector<int> labels, std::vector<std::string> attribute_names,
      std::vector<std::string> class_names);

  size_t num_records() const { return labels_.size(); }
  size_t num_attributes() const { return num_attributes_; }
  size_t num_classes() const { return class_names_.size(); }

  std::span<const double> features() const { return features_; }
  std::span<const double> row(size_t i) const {
    return std::span<const double>(features_).subspan(i * num_attributes_,
                                                      num_attributes_);
  }
  double at(size_t i, size_t j) const {
    return features_[i * num_attributes_ + j];
  }
  std::span<const int> labels() const { return labels_; }
  int label(size_t i) const { return labels_[i]; }
  const std::vector<std::string>& attribute_names() const {
    return attribute_names_;
  }
  const std::vector<std::string>& class_names() const { return class_names_; }

  // Records at `indices`, in that order, sharing names and class list.
  Dataset Subset(std::span<const size_t> indices) const;

  // Same labels and names with a replacement feature matrix.
  absl::StatusOr<Dataset> WithFeatures(std::vector<double> features) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  Dataset() = default;

  std::vector<double> features_;
  size_t num_attributes_ = 0;
  std::vector<int> labels_;
  std::vector<std::string> attribute_names_;
  std::vector<std::string> class_names_;
};

// Column roles for delimiter-separated input. Every column other than the
// label column is a feature. The default matches the UCI Iris file: comma
// separated, no header, label in the last column.
struct CsvSchema {
  char delimiter = ',';
  bool has_header = false;
  // Zero-based; negative values count from the end (-1 = last column).
  int label_column = -1;
};

// Errors: DataLoss for a malformed row or non-numeric cell (message carries
// the line number), FailedPrecondition for input without records.
absl::StatusOr<Dataset> LoadCsv(std::istream& in, const CsvSchema& schema = {});
absl::StatusOr<Dataset> LoadCsvFile(const std::string& path,
                                    const CsvSchema& schema = {});

// Writes features with shortest round-trip formatting, so LoadCsv restores
// them bit-exactly. A header is emitted iff schema.has_header.
void WriteCsv(const Dataset& data, std::ostream& out,
              const CsvSchema& schema = {});

enum class StdConvention { kPopulation, kSample };

struct AttributeStats {
  std::vector<double> mean;
  std::vector<double> stddev;
};

// Single-pass (Welford) mean and standard deviation per attribute.
// kSample with one record reports stddev 0.
AttributeStats ComputeAttributeStats(
    const Dataset& data, StdConvention convention = StdConvention::kPopulation);

struct FoldAssignment {
  int fold_count = 0;
  std::vector<int> fold_of;  // per record, in [0, fold_count)

  std::vector<size_t> Members(int fold) const;
  std::vector<size_t> NonMembers(int fold) const;

  friend bool operator==(const FoldAssignment&,
                         const FoldAssignment&) = default;
};

// Seeded shuffle of record indices dealt round-robin into folds. The
// stratified variant shuffles each class separately (in class-index order,
// from one stream) and keeps dealing from where the previous class stopped,
// so both overall and per-class fold counts differ by at most one.
//
// Requires 2 <= fold_count <= n, and fold_count <= smallest class size when
// stratified; otherwise InvalidArgument.
absl::StatusOr<FoldAssignment> SplitFolds(const Dataset& data, int fold_count,
                                          uint64_t seed,
                                          bool stratified = true);

}  // namespace noisegauge

#endif  // NOISEGAUGE_DATASET_H_
