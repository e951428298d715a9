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

#include "noisegauge/plot.h"

#include <fmt/format.h>

#include <algorithm>
#include <map>

#include "noisegauge/kv_config.h"

namespace noisegauge {

void WritePlotData(std::ostream& out, const Dataset& data,
                   const CvResult& result) {
  const auto& names = data.attribute_names();
  out << "# axes=" << names[0] << ","
      << (names.size() > 1 ? names[1] : std::string("none")) << "\n";
  out << "index,true_class,predicted_class,x,y\n";
  for (size_t i = 0; i < data.num_records(); ++i) {
    const double y = data.num_attributes() > 1 ? data.at(i, 1) : 0.0;
    out << i << ',' << data.class_names()[data.label(i)] << ','
        << data.class_names()[result.predictions[i]] << ','
        << FormatDouble(data.at(i, 0)) << ',' << FormatDouble(y) << '\n';
  }
}

absl::StatusOr<PlotData> ReadPlotData(std::istream& in) {
  PlotData plot;
  std::string line;
  int line_no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = Trim(line);
    if (s.empty()) continue;
    if (s.starts_with("# axes=")) {
      s.remove_prefix(7);
      std::vector<std::string_view> axes = Split(s, ',');
      if (axes.size() == 2) {
        plot.x_label = std::string(axes[0]);
        plot.y_label = std::string(axes[1]);
      }
      continue;
    }
    if (s.front() == '#') continue;
    if (!seen_header) {
      seen_header = true;
      if (s.starts_with("index,")) continue;
    }
    std::vector<std::string_view> cells = Split(s, ',');
    if (cells.size() != 5) {
      return absl::DataLossError(
          fmt::format("plot data line {}: expected 5 fields, found {}", line_no,
                      cells.size()));
    }
    PlotPoint p;
    auto index = ParseUint(cells[0]);
    auto x = ParseFiniteDouble(cells[3]);
    auto y = ParseFiniteDouble(cells[4]);
    if (!index.ok() || !x.ok() || !y.ok()) {
      return absl::DataLossError(
          fmt::format("plot data line {}: malformed number", line_no));
    }
    p.index = *index;
    p.truth = std::string(cells[1]);
    p.predicted = std::string(cells[2]);
    p.x = *x;
    p.y = *y;
    plot.points.push_back(std::move(p));
  }
  if (plot.points.empty()) {
    return absl::FailedPreconditionError("plot data has no records");
  }
  return plot;
}

namespace {

constexpr double kWidth = 640, kHeight = 480, kMargin = 60;
constexpr const char* kPalette[] = {"#1f77b4", "#2ca02c", "#9467bd",
                                    "#8c564b", "#17becf", "#bcbd22"};

std::string Escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string Coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string RenderScatterSvg(const PlotData& data, const SvgOptions& options) {
  double x_min = data.points[0].x, x_max = x_min;
  double y_min = data.points[0].y, y_max = y_min;
  for (const PlotPoint& p : data.points) {
    x_min = std::min(x_min, p.x);
    x_max = std::max(x_max, p.x);
    y_min = std::min(y_min, p.y);
    y_max = std::max(y_max, p.y);
  }
  if (x_max == x_min) x_max = x_min + 1;
  if (y_max == y_min) y_max = y_min + 1;
  const double plot_w = kWidth - 2 * kMargin, plot_h = kHeight - 2 * kMargin;
  auto sx = [&](double x) {
    return kMargin + (x - x_min) / (x_max - x_min) * plot_w;
  };
  auto sy = [&](double y) {
    return kHeight - kMargin - (y - y_min) / (y_max - y_min) * plot_h;
  };

  std::map<std::string, size_t> class_color;
  for (const PlotPoint& p : data.points) {
    class_color.try_emplace(p.truth, class_color.size());
  }
  size_t wrong = 0;
  for (const PlotPoint& p : data.points) wrong += !p.correct();

  std::string svg = fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg "
      "xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\">\n",
      kWidth, kHeight, kWidth, kHeight);
  if (options.timestamp) {
    svg += fmt::format("<!-- generated {} -->\n", Escape(*options.timestamp));
  }
  svg += std::string("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
  svg += fmt::format(
      "<text x=\"{}\" y=\"25\" text-anchor=\"middle\" "
      "font-size=\"15\">{}</text>\n",
      kWidth / 2, Escape(options.title));
  svg += fmt::format(
      "<text x=\"{}\" y=\"44\" text-anchor=\"middle\" font-size=\"12\">{} "
      "records, {} misclassified ({})</text>\n",
      kWidth / 2, data.points.size(), wrong,
      FormatDouble(static_cast<double>(wrong) /
                   static_cast<double>(data.points.size())));
  svg += fmt::format(
      "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
      "stroke=\"black\"/>\n",
      kMargin, kMargin, plot_w, plot_h);
  svg += fmt::format(
      "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" "
      "font-size=\"12\">{}</text>\n",
      kWidth / 2, kHeight - 20, Escape(data.x_label));
  svg += fmt::format(
      "<text x=\"18\" y=\"{0}\" text-anchor=\"middle\" font-size=\"12\" "
      "transform=\"rotate(-90 18 {0})\">{1}</text>\n",
      kHeight / 2, Escape(data.y_label));
  svg += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"10\">{}</text>\n",
                     kMargin, kHeight - kMargin + 15, FormatDouble(x_min));
  svg += fmt::format(
      "<text x=\"{}\" y=\"{}\" text-anchor=\"end\" "
      "font-size=\"10\">{}</text>\n",
      kWidth - kMargin, kHeight - kMargin + 15, FormatDouble(x_max));
  svg += fmt::format(
      "<text x=\"{}\" y=\"{}\" text-anchor=\"end\" "
      "font-size=\"10\">{}</text>\n",
      kMargin - 5, kHeight - kMargin, FormatDouble(y_min));
  svg += fmt::format(
      "<text x=\"{}\" y=\"{}\" text-anchor=\"end\" "
      "font-size=\"10\">{}</text>\n",
      kMargin - 5, kMargin + 8, FormatDouble(y_max));

  // Correct records first so misclassification marks stay on top.
  for (int pass = 0; pass < 2; ++pass) {
    for (const PlotPoint& p : data.points) {
      if (p.correct() != (pass == 0)) continue;
      const std::string cx = Coord(sx(p.x)), cy = Coord(sy(p.y));
      const char* color = kPalette[class_color[p.truth] % std::size(kPalette)];
      if (p.correct()) {
        svg += fmt::format(
            "<circle class=\"correct\" cx=\"{}\" cy=\"{}\" r=\"3.5\" "
            "fill=\"{}\" fill-opacity=\"0.7\"/>\n",
            cx, cy, color);
      } else {
        const double x = sx(p.x), y = sy(p.y);
        svg += fmt::format(
            "<path class=\"misclassified\" d=\"M{} {} L{} {} M{} {} L{} {}\" "
            "stroke=\"#d62728\" stroke-width=\"2\"/>\n",
            Coord(x - 5), Coord(y - 5), Coord(x + 5), Coord(y + 5),
            Coord(x - 5), Coord(y + 5), Coord(x + 5), Coord(y - 5));
      }
    }
  }

  double legend_y = kMargin + 15;
  for (const auto& [name, idx] : class_color) {
    svg += fmt::format(
        "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{}\"/>\n<text x=\"{}\" "
        "y=\"{}\" font-size=\"10\">{}</text>\n",
        kWidth - kMargin - 120, legend_y - 4,
        kPalette[idx % std::size(kPalette)], kWidth - kMargin - 110, legend_y,
        Escape(name));
    legend_y += 14;
  }
  svg += fmt::format(
      "<text x=\"{}\" y=\"{}\" font-size=\"10\" fill=\"#d62728\">x "
      "misclassified</text>\n</svg>\n",
      kWidth - kMargin - 124, legend_y);
  return svg;
}

}  // namespace noisegauge
