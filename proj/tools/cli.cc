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

#include "cli.h"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "noisegauge/dataset.h"
#include "noisegauge/evaluate.h"
#include "noisegauge/kv_config.h"
#include "noisegauge/noise.h"
#include "noisegauge/plot.h"
#include "noisegauge/report.h"
#include "noisegauge/tuner.h"

namespace noisegauge::cli {
namespace {

namespace fs = std::filesystem;

int ExitCodeFor(const absl::Status& s) {
  return s.code() == absl::StatusCode::kInvalidArgument ? kExitUsage : kExitIo;
}

int Fail(std::ostream& err, const absl::Status& s) {
  err << "error: " << s.message() << "\n";
  return ExitCodeFor(s);
}

absl::Status WriteTextFile(const fs::path& path, const std::string& contents) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        fmt::format("cannot write {}", path.string()));
  }
  out << contents;
  out.close();
  if (!out) {
    return absl::DataLossError(fmt::format("write failed: {}", path.string()));
  }
  return absl::OkStatus();
}

// Flag > environment > current directory.
fs::path OutDir(const std::optional<std::string>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kOutDirEnv); env && *env) return env;
  return ".";
}

struct DataFlags {
  std::string path;
  std::string delimiter = ",";
  bool header = false;
  int label_column = -1;

  void Add(CLI::App* app) {
    app->add_option("--in", path, "Input dataset (delimiter-separated)")
        ->required();
    app->add_option("--delimiter", delimiter, "Field delimiter")
        ->capture_default_str();
    app->add_flag("--header", header, "First row is a header");
    app->add_option("--label-column", label_column,
                    "Label column index; negative counts from the end")
        ->capture_default_str();
  }

  absl::StatusOr<CsvSchema> Schema() const {
    if (delimiter.size() != 1) {
      return absl::InvalidArgumentError("delimiter must be one character");
    }
    return CsvSchema{delimiter[0], header, label_column};
  }

  absl::StatusOr<Dataset> Load() const {
    auto schema = Schema();
    if (!schema.ok()) return schema.status();
    return LoadCsvFile(path, *schema);
  }

  void Describe(Report& r) const {
    r.Set("config.input", path);
    r.Set("config.delimiter", delimiter);
    r.Set("config.header", header ? "true" : "false");
    r.Set("config.label_column", fmt::format("{}", label_column));
  }
};

struct NoiseFlags {
  std::optional<std::string> config;
  std::optional<std::string> mode;
  std::optional<double> mean;
  std::optional<double> stddev;

  void Add(CLI::App* app) {
    app->add_option("--noise-config", config,
                    "Noise parameter file (keys mode, mean, std, seed)");
    app->add_option("--mode", mode, "Noise mode: fixed | attribute-scaled");
    app->add_option("--mean", mean,
                    "Noise mean (multiplier in attribute-scaled mode)");
    app->add_option("--std", stddev,
                    "Noise std (multiplier in attribute-scaled mode)");
  }

  // Missing flags fall back to the config file, then to the mode defaults:
  // (0, 0) for fixed, (1, 1) for attribute-scaled.
  absl::StatusOr<NoiseParams> Resolve(std::optional<uint64_t> seed) const {
    KeyValueConfig kv;
    if (config) {
      auto parsed = KeyValueConfig::ParseFile(*config);
      if (!parsed.ok()) return parsed.status();
      kv = *std::move(parsed);
    }
    std::string text;
    for (const auto& [k, v] : kv.entries())
      text += fmt::format("{}={}\n", k, v);
    if (mode) text += fmt::format("mode={}\n", *mode);
    if (mean) text += fmt::format("mean={}\n", FormatDouble(*mean));
    if (stddev) text += fmt::format("std={}\n", FormatDouble(*stddev));
    if (seed) text += fmt::format("seed={}\n", *seed);
    auto merged = KeyValueConfig::Parse(text);
    if (!merged.ok()) return merged.status();
    return ParseNoiseParams(*merged);
  }
};

struct CvFlags {
  int k = 1;
  std::string tie_rule = "nearest";
  int folds = 10;
  bool unstratified = false;

  void Add(CLI::App* app) {
    app->add_option("--k", k, "Number of neighbors")->capture_default_str();
    app->add_option("--tie-rule", tie_rule,
                    "Vote tie rule: nearest | lowest-index")
        ->capture_default_str();
    app->add_option("--folds", folds, "Cross-validation folds")
        ->capture_default_str();
    app->add_flag("--unstratified", unstratified,
                  "Deal folds without per-class stratification");
  }

  absl::StatusOr<CvConfig> Resolve() const {
    auto rule = ParseTieRule(tie_rule);
    if (!rule.ok()) return rule.status();
    CvConfig cv;
    cv.knn.k = k;
    cv.knn.tie_rule = *rule;
    cv.fold_count = folds;
    cv.stratified = !unstratified;
    return cv;
  }
};

struct SeedFlags {
  std::vector<uint64_t> seeds{0};
  int count = 1;

  void Add(CLI::App* app) {
    app->add_option("--seed", seeds, "Seed list (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    app->add_option("--seed-count", count,
                    "Expand a single --seed S into S, S+1, ..., S+count-1")
        ->capture_default_str();
  }

  absl::StatusOr<std::vector<uint64_t>> Resolve() const {
    if (seeds.empty()) return absl::InvalidArgumentError("seed list is empty");
    if (count < 1)
      return absl::InvalidArgumentError("--seed-count must be >= 1");
    if (count == 1) return seeds;
    if (seeds.size() != 1) {
      return absl::InvalidArgumentError(
          "--seed-count needs exactly one --seed value");
    }
    std::vector<uint64_t> out;
    for (int i = 0; i < count; ++i) out.push_back(seeds[0] + i);
    return out;
  }
};

struct OutputFlags {
  std::optional<std::string> out_dir;
  std::string format = "human";

  void Add(CLI::App* app) {
    app->add_option(
        "--out-dir", out_dir,
        fmt::format("Output directory (default ${} or .)", kOutDirEnv));
    app->add_option("--format", format, "Console format: human | kv")
        ->capture_default_str();
  }
};

struct Summary {
  double mean = 0, min = 0, max = 0;
};

Summary Summarize(const std::vector<double>& errors) {
  Summary s{0, errors.front(), errors.front()};
  for (double e : errors) {
    s.mean += e;
    s.min = std::min(s.min, e);
    s.max = std::max(s.max, e);
  }
  s.mean /= static_cast<double>(errors.size());
  return s;
}

std::string JoinSeeds(const std::vector<uint64_t>& seeds) {
  return fmt::format("{}", fmt::join(seeds, ","));
}

// ---------------------------------------------------------------- privatize

struct PrivatizeFlags {
  DataFlags data;
  NoiseFlags noise;
  std::optional<uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> out_dir;
};

int RunPrivatize(const PrivatizeFlags& f, std::ostream& out,
                 std::ostream& err) {
  auto data = f.data.Load();
  if (!data.ok()) return Fail(err, data.status());
  auto params = f.noise.Resolve(f.seed);
  if (!params.ok()) return Fail(err, params.status());
  auto schema = f.data.Schema();
  if (!schema.ok()) return Fail(err, schema.status());
  auto z = Privatize(*data, *params);
  if (!z.ok()) return Fail(err, z.status());

  const fs::path path =
      f.out ? fs::path(*f.out) : OutDir(f.out_dir) / "privatized.csv";
  std::ostringstream csv;
  WriteCsv(*z, csv, *schema);
  if (auto s = WriteTextFile(path, csv.str()); !s.ok()) return Fail(err, s);

  out << FormatNoiseParams(*params);
  out << "records=" << z->num_records() << "\n";
  out << "attributes=" << z->num_attributes() << "\n";
  out << "output=" << path.string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- evaluate

struct EvaluateFlags {
  DataFlags data;
  NoiseFlags noise;
  CvFlags cv;
  SeedFlags seeds;
  OutputFlags output;
  std::string test_on = "privatized";
  std::optional<std::string> report;
  std::optional<std::string> plot_data;
};

int RunEvaluate(const EvaluateFlags& f, std::ostream& out, std::ostream& err) {
  auto format = ParseReportFormat(f.output.format);
  if (!format.ok()) return Fail(err, format.status());
  auto cv = f.cv.Resolve();
  if (!cv.ok()) return Fail(err, cv.status());
  auto seeds = f.seeds.Resolve();
  if (!seeds.ok()) return Fail(err, seeds.status());
  TestSource source;
  if (f.test_on == "privatized") {
    source = TestSource::kPrivatized;
  } else if (f.test_on == "original") {
    source = TestSource::kOriginal;
  } else {
    return Fail(err, absl::InvalidArgumentError(fmt::format(
                         "--test-on must be privatized or original, got '{}'",
                         f.test_on)));
  }
  // Validate the noise flags before touching the input file.
  auto noise = f.noise.Resolve(seeds->front());
  if (!noise.ok()) return Fail(err, noise.status());
  auto data = f.data.Load();
  if (!data.ok()) return Fail(err, data.status());

  std::vector<CvResult> runs;
  std::vector<double> errors;
  for (uint64_t seed : *seeds) {
    NoiseParams params = *noise;
    params.seed = seed;
    CvConfig run_cv = *cv;
    run_cv.seed = seed;
    auto result = PipelineEvaluate(*data, params, run_cv, source);
    if (!result.ok()) return Fail(err, result.status());
    errors.push_back(result->overall_error);
    runs.push_back(*std::move(result));
  }
  const Summary summary = Summarize(errors);

  auto build = [&](bool detailed) {
    Report r("evaluate");
    f.data.Describe(r);
    r.Set("config.noise.mode", std::string(NoiseModeName(noise->mode)));
    r.Set("config.noise.mean", FormatDouble(noise->mean));
    r.Set("config.noise.std", FormatDouble(noise->stddev));
    AppendCvConfig(r, "config.", *cv);
    r.Set("config.test_on", f.test_on);
    r.Set("config.seeds", JoinSeeds(*seeds));
    r.Set("result.records", fmt::format("{}", data->num_records()));
    r.Set("result.runs", fmt::format("{}", runs.size()));
    r.Set("result.mean_error", FormatDouble(summary.mean));
    r.Set("result.min_error", FormatDouble(summary.min));
    r.Set("result.max_error", FormatDouble(summary.max));
    Table per_seed{"seeds", {"seed", "misclassified", "error"}, {}};
    for (size_t i = 0; i < runs.size(); ++i) {
      per_seed.rows.push_back({fmt::format("{}", (*seeds)[i]),
                               fmt::format("{}", runs[i].misclassified),
                               FormatDouble(runs[i].overall_error)});
    }
    r.AddTable(std::move(per_seed));
    if (detailed || runs.size() == 1) {
      for (size_t i = 0; i < runs.size(); ++i) {
        AppendCvResult(r, fmt::format("run.{}.", i), runs[i], *data);
      }
    }
    return r;
  };

  const Report full = build(true);
  const std::string machine = full.Render(ReportFormat::kMachine);
  const fs::path report_path =
      f.report ? fs::path(*f.report)
               : OutDir(f.output.out_dir) / "evaluate.report";
  if (auto s = WriteTextFile(report_path, machine); !s.ok())
    return Fail(err, s);

  if (f.plot_data) {
    // Plot data follows the first seed, on the data the classifier saw.
    NoiseParams params = *noise;
    params.seed = seeds->front();
    auto z = Privatize(*data, params);
    if (!z.ok()) return Fail(err, z.status());
    std::ostringstream plot;
    WritePlotData(plot, source == TestSource::kPrivatized ? *z : *data,
                  runs[0]);
    if (auto s = WriteTextFile(*f.plot_data, plot.str()); !s.ok()) {
      return Fail(err, s);
    }
  }

  out << (*format == ReportFormat::kMachine ? machine
                                            : build(false).Render(*format));
  return kExitOk;
}

// ---------------------------------------------------------------- tune

struct TuneFlags {
  DataFlags data;
  std::optional<std::string> config;
  std::optional<double> threshold;
  std::optional<std::string> schedule;
  std::optional<double> decay;
  std::optional<int> max_iterations;
  std::vector<std::string> steps;
  std::optional<std::string> mode;
  std::optional<double> mean;
  std::optional<double> stddev;
  std::optional<int> k;
  std::optional<std::string> tie_rule;
  std::optional<int> folds;
  bool unstratified = false;
  std::optional<uint64_t> seed;
  std::optional<std::string> seed_policy;
  OutputFlags output;
  std::optional<std::string> report;
};

absl::StatusOr<TuneConfig> ResolveTuneConfig(const TuneFlags& f) {
  std::string text;
  if (f.config) {
    auto parsed = KeyValueConfig::ParseFile(*f.config);
    if (!parsed.ok()) return parsed.status();
    for (const auto& [k, v] : parsed->entries()) {
      text += fmt::format("{}={}\n", k, v);
    }
  }
  auto put = [&](std::string_view key, const std::string& v) {
    text += fmt::format("{}={}\n", key, v);
  };
  if (f.threshold) put("threshold", FormatDouble(*f.threshold));
  if (f.schedule) put("schedule", *f.schedule);
  if (f.decay) put("decay", FormatDouble(*f.decay));
  if (f.max_iterations)
    put("max_iterations", fmt::format("{}", *f.max_iterations));
  for (const auto& s : f.steps) put("step", s);
  if (f.mode) put("mode", *f.mode);
  if (f.mean) put("mean", FormatDouble(*f.mean));
  if (f.stddev) put("std", FormatDouble(*f.stddev));
  if (f.k) put("k", fmt::format("{}", *f.k));
  if (f.tie_rule) put("tie_rule", *f.tie_rule);
  if (f.folds) put("folds", fmt::format("{}", *f.folds));
  if (f.unstratified) put("stratified", "false");
  if (f.seed) put("seed", fmt::format("{}", *f.seed));
  if (f.seed_policy) put("seed_policy", *f.seed_policy);
  auto kv = KeyValueConfig::Parse(text);
  if (!kv.ok()) return kv.status();
  return ParseTuneConfig(*kv);
}

int RunTune(const TuneFlags& f, std::ostream& out, std::ostream& err) {
  auto format = ParseReportFormat(f.output.format);
  if (!format.ok()) return Fail(err, format.status());
  auto cfg = ResolveTuneConfig(f);
  if (!cfg.ok()) return Fail(err, cfg.status());
  auto data = f.data.Load();
  if (!data.ok()) return Fail(err, data.status());
  auto trace = Tune(*data, *cfg);
  if (!trace.ok()) return Fail(err, trace.status());

  Report r("tune");
  f.data.Describe(r);
  r.Set("config.threshold", FormatDouble(cfg->error_threshold));
  r.Set("config.schedule", std::string(ScheduleName(cfg->schedule)));
  r.Set("config.max_iterations", fmt::format("{}", cfg->max_iterations));
  if (cfg->schedule == Schedule::kMultiplicative) {
    r.Set("config.decay", FormatDouble(cfg->decay));
    r.Set("config.initial.mode", std::string(NoiseModeName(cfg->initial.mode)));
    r.Set("config.initial.mean", FormatDouble(cfg->initial.mean));
    r.Set("config.initial.std", FormatDouble(cfg->initial.stddev));
  } else {
    for (size_t i = 0; i < cfg->steps.size(); ++i) {
      const NoiseParams& p = cfg->steps[i];
      r.Set(fmt::format("config.step.{}", i),
            fmt::format("{}:{}:{}", NoiseModeName(p.mode), FormatDouble(p.mean),
                        FormatDouble(p.stddev)));
    }
  }
  AppendCvConfig(r, "config.", cfg->cv);
  r.Set("config.seed", fmt::format("{}", cfg->cv.seed));
  r.Set("config.seed_policy", std::string(SeedPolicyName(cfg->seed_policy)));
  AppendTuneTrace(r, *trace, cfg->error_threshold);

  const std::string machine = r.Render(ReportFormat::kMachine);
  const fs::path report_path =
      f.report ? fs::path(*f.report) : OutDir(f.output.out_dir) / "tune.report";
  if (auto s = WriteTextFile(report_path, machine); !s.ok())
    return Fail(err, s);
  out << r.Render(*format);
  return trace->outcome == TuneOutcome::kMetThreshold ? kExitOk : kExitBudget;
}

// ---------------------------------------------------------------- sweep

struct SweepFlags {
  DataFlags data;
  std::string mode = "fixed";
  double mean = 0.0;
  std::vector<double> stds{0.0, 0.05, 0.1, 0.5};
  CvFlags cv;
  SeedFlags seeds;
  OutputFlags output;
  std::optional<std::string> report;
};

int RunSweep(const SweepFlags& f, std::ostream& out, std::ostream& err) {
  auto format = ParseReportFormat(f.output.format);
  if (!format.ok()) return Fail(err, format.status());
  auto mode = ParseNoiseMode(f.mode);
  if (!mode.ok()) return Fail(err, mode.status());
  auto cv = f.cv.Resolve();
  if (!cv.ok()) return Fail(err, cv.status());
  auto seeds = f.seeds.Resolve();
  if (!seeds.ok()) return Fail(err, seeds.status());
  if (f.stds.empty()) {
    return Fail(err, absl::InvalidArgumentError("--stds is empty"));
  }
  for (double s : f.stds) {
    if (auto st = ValidateNoiseParams({*mode, f.mean, s, 0}); !st.ok()) {
      return Fail(err, st);
    }
  }
  auto data = f.data.Load();
  if (!data.ok()) return Fail(err, data.status());

  Report r("sweep");
  f.data.Describe(r);
  r.Set("config.noise.mode", std::string(NoiseModeName(*mode)));
  r.Set("config.noise.mean", FormatDouble(f.mean));
  std::vector<std::string> std_text;
  for (double s : f.stds) std_text.push_back(FormatDouble(s));
  r.Set("config.noise.stds", fmt::format("{}", fmt::join(std_text, ",")));
  AppendCvConfig(r, "config.", *cv);
  r.Set("config.seeds", JoinSeeds(*seeds));

  Table summary{"summary", {"std", "mean_error", "min_error", "max_error"}, {}};
  Table grid{"grid", {"std", "seed", "error"}, {}};
  for (double s : f.stds) {
    std::vector<double> errors;
    for (uint64_t seed : *seeds) {
      CvConfig run_cv = *cv;
      run_cv.seed = seed;
      auto result = PipelineEvaluate(*data, {*mode, f.mean, s, seed}, run_cv);
      if (!result.ok()) return Fail(err, result.status());
      errors.push_back(result->overall_error);
      grid.rows.push_back({FormatDouble(s), fmt::format("{}", seed),
                           FormatDouble(result->overall_error)});
    }
    const Summary sm = Summarize(errors);
    summary.rows.push_back({FormatDouble(s), FormatDouble(sm.mean),
                            FormatDouble(sm.min), FormatDouble(sm.max)});
  }
  r.AddTable(std::move(summary));
  const std::string console_only = r.Render(*format);
  r.AddTable(std::move(grid));

  const std::string machine = r.Render(ReportFormat::kMachine);
  const fs::path report_path = f.report
                                   ? fs::path(*f.report)
                                   : OutDir(f.output.out_dir) / "sweep.report";
  if (auto s = WriteTextFile(report_path, machine); !s.ok())
    return Fail(err, s);
  out << (*format == ReportFormat::kMachine ? machine : console_only);
  return kExitOk;
}

// ---------------------------------------------------------------- plot

struct PlotFlags {
  std::string in;
  std::optional<std::string> out;
  std::optional<std::string> out_dir;
  std::string title = "KNN classification";
  bool no_timestamp = false;
};

std::string UtcTimestamp() {
  const auto now = std::chrono::floor<std::chrono::seconds>(
      std::chrono::system_clock::now());
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int RunPlot(const PlotFlags& f, std::ostream& out, std::ostream& err) {
  std::ifstream in(f.in);
  if (!in) {
    return Fail(err, absl::NotFoundError(fmt::format("cannot open {}", f.in)));
  }
  auto plot = ReadPlotData(in);
  if (!plot.ok()) {
    return Fail(
        err, absl::Status(plot.status().code(),
                          fmt::format("{}: {}", f.in,
                                      std::string(plot.status().message()))));
  }
  SvgOptions options;
  options.title = f.title;
  if (!f.no_timestamp) options.timestamp = UtcTimestamp();
  const fs::path path =
      f.out ? fs::path(*f.out) : OutDir(f.out_dir) / "plot.svg";
  if (auto s = WriteTextFile(path, RenderScatterSvg(*plot, options)); !s.ok()) {
    return Fail(err, s);
  }
  const size_t wrong =
      std::count_if(plot->points.begin(), plot->points.end(),
                    [](const PlotPoint& p) { return !p.correct(); });
  out << "points=" << plot->points.size() << "\n";
  out << "misclassified=" << wrong << "\n";
  out << "error="
      << FormatDouble(static_cast<double>(wrong) /
                      static_cast<double>(plot->points.size()))
      << "\n";
  out << "output=" << path.string() << "\n";
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Additive-noise privatization with KNN utility gauging",
               "noisegauge"};
  app.require_subcommand(1);

  PrivatizeFlags pf;
  CLI::App* privatize = app.add_subcommand("privatize", "Write Z = X + noise");
  pf.data.Add(privatize);
  pf.noise.Add(privatize);
  privatize->add_option("--seed", pf.seed, "Noise seed (default 0)");
  privatize->add_option("--out", pf.out, "Output dataset path");
  privatize->add_option("--out-dir", pf.out_dir, "Output directory");

  EvaluateFlags ef;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Cross-validated KNN error, optionally after privatization");
  ef.data.Add(evaluate);
  ef.noise.Add(evaluate);
  ef.cv.Add(evaluate);
  ef.seeds.Add(evaluate);
  ef.output.Add(evaluate);
  evaluate
      ->add_option("--test-on", ef.test_on,
                   "Held-out features: privatized | original")
      ->capture_default_str();
  evaluate->add_option("--report", ef.report, "Machine report path");
  evaluate->add_option("--plot-data", ef.plot_data,
                       "Write per-record plot data for the first seed");

  TuneFlags tf;
  CLI::App* tune = app.add_subcommand(
      "tune", "Adjust noise until the error meets a threshold");
  tf.data.Add(tune);
  tune->add_option("--config", tf.config, "Tune config file");
  tune->add_option("--threshold", tf.threshold, "Error threshold in [0, 1]");
  tune->add_option("--schedule", tf.schedule, "multiplicative | explicit");
  tune->add_option("--decay", tf.decay, "Std decay factor in (0, 1)");
  tune->add_option("--max-iterations", tf.max_iterations, "Step budget");
  tune->add_option("--step", tf.steps,
                   "Explicit schedule entry mode:mean:std (repeatable)");
  tune->add_option("--mode", tf.mode, "Initial noise mode");
  tune->add_option("--mean", tf.mean, "Initial noise mean");
  tune->add_option("--std", tf.stddev, "Initial noise std");
  tune->add_option("--k", tf.k, "Number of neighbors");
  tune->add_option("--tie-rule", tf.tie_rule, "nearest | lowest-index");
  tune->add_option("--folds", tf.folds, "Cross-validation folds");
  tune->add_flag("--unstratified", tf.unstratified, "Unstratified folds");
  tune->add_option("--seed", tf.seed, "Base seed");
  tune->add_option("--seed-policy", tf.seed_policy, "fixed | fresh");
  tf.output.Add(tune);
  tune->add_option("--report", tf.report, "Machine report path");

  SweepFlags sf;
  CLI::App* sweep =
      app.add_subcommand("sweep", "Error over a grid of noise stds");
  sf.data.Add(sweep);
  sweep->add_option("--mode", sf.mode, "Noise mode")->capture_default_str();
  sweep->add_option("--mean", sf.mean, "Noise mean")->capture_default_str();
  sweep->add_option("--stds", sf.stds, "Std grid (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  sf.cv.Add(sweep);
  sf.seeds.Add(sweep);
  sf.output.Add(sweep);
  sweep->add_option("--report", sf.report, "Machine report path");

  PlotFlags plf;
  CLI::App* plot = app.add_subcommand("plot", "Render plot data as SVG");
  plot->add_option("--in", plf.in, "Plot data from evaluate --plot-data")
      ->required();
  plot->add_option("--out", plf.out, "SVG output path");
  plot->add_option("--out-dir", plf.out_dir, "Output directory");
  plot->add_option("--title", plf.title, "Plot title")->capture_default_str();
  plot->add_flag("--no-timestamp", plf.no_timestamp,
                 "Omit the generation timestamp");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (privatize->parsed()) return RunPrivatize(pf, out, err);
  if (evaluate->parsed()) return RunEvaluate(ef, out, err);
  if (tune->parsed()) return RunTune(tf, out, err);
  if (sweep->parsed()) return RunSweep(sf, out, err);
  if (plot->parsed()) return RunPlot(plf, out, err);
  return kExitUsage;
}

}  // namespace noisegauge::cli
