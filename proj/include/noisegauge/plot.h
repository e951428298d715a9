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

#ifndef NOISEGAUGE_PLOT_H_
#define NOISEGAUGE_PLOT_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "noisegauge/dataset.h"
#include "noisegauge/evaluate.h"

namespace noisegauge {

// One classified record projected onto the first two attributes.
struct PlotPoint {
  size_t index = 0;
  std::string truth;
  std::string predicted;
  double x = 0.0;
  double y = 0.0;

  bool correct() const { return truth == predicted; }
  friend bool operator==(const PlotPoint&, const PlotPoint&) = default;
};

// CSV with header "index,true_class,predicted_class,x,y". Axis names travel
// in a leading "# axes=<x>,<y>" comment line.
void WritePlotData(std::ostream& out, const Dataset& data,
                   const CvResult& result);

struct PlotData {
  std::string x_label = "x";
  std::string y_label = "y";
  std::vector<PlotPoint> points;
};

// DataLoss on malformed rows, FailedPrecondition when there are no points.
absl::StatusOr<PlotData> ReadPlotData(std::istream& in);

struct SvgOptions {
  std::string title;
  // Emitted as an XML comment when set.
  std::optional<std::string> timestamp;
};

// Scatter plot: circles for correctly classified records (filled by true
// class), crosses for misclassified ones.
std::string RenderScatterSvg(const PlotData& data, const SvgOptions& options);

}  // namespace noisegauge

#endif  // NOISEGAUGE_PLOT_H_
