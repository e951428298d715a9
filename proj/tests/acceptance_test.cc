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

// Standalone acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "noisegauge/dataset.h"
#include "noisegauge/evaluate.h"
#include "noisegauge/knn.h"
#include "noisegauge/noise.h"
#include "noisegauge/rng.h"
#include "noisegauge/tuner.h"
#include "testing/oracles.h"

namespace noisegauge {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr int kSeedCount = 20;  // seeds 0..19

struct Verdict {
  bool pass = true;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const Dataset& Iris() {
  static const Dataset iris = *LoadCsvFile(testing::IrisPath());
  return iris;
}

CvConfig BaseCv(uint64_t seed) { return {{1}, 10, seed, true}; }

double ErrorFor(const NoiseParams& noise, uint64_t seed) {
  NoiseParams p = noise;
  p.seed = seed;
  auto r = PipelineEvaluate(Iris(), p, BaseCv(seed));
  if (!r.ok()) {
    std::cerr << "pipeline failed: " << r.status() << "\n";
    std::exit(2);
  }
  return r->overall_error;
}

double Mean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / v.size();
}

// Baseline over 20 seeds; each seed's error is also recomputed with the
// stable-sort oracle on the same folds.
Verdict BaselineFidelity() {
  const auto start = Clock::now();
  std::vector<double> errors;
  int exact_six = 0, oracle_mismatch = 0;
  for (uint64_t seed = 0; seed < kSeedCount; ++seed) {
    auto r = *CrossValidate(Iris(), BaseCv(seed));
    errors.push_back(r.overall_error);
    if (r.misclassified == 6) ++exact_six;
    for (int f = 0; f < 10; ++f) {
      Dataset train = Iris().Subset(r.folds.NonMembers(f));
      for (size_t i : r.folds.Members(f)) {
        const auto row = Iris().row(i);
        const int want = testing::BruteForceKnn(
            train, {row.begin(), row.end()}, 1, TieRule::kNearestOfTiedClasses);
        if (want != r.predictions[i]) ++oracle_mismatch;
      }
    }
  }
  const double mean = Mean(errors);
  const double secs = Seconds(start);
  Verdict v;
  v.pass = mean >= 0.013 && mean <= 0.067 && exact_six > 0 &&
           oracle_mismatch == 0 && secs < 5.0;
  v.detail = fmt::format(
      "mean error {:.4f} in [0.013, 0.067]; {} seeds at 6/150; {} oracle "
      "mismatches; {:.2f}s < 5s",
      mean, exact_six, oracle_mismatch, secs);
  return v;
}

Verdict DegradationOrdering() {
  const NoiseParams none{NoiseMode::kFixed, 0, 0, 0};
  const NoiseParams fixed{NoiseMode::kFixed, 0, 0.1, 0};
  const NoiseParams scaled{NoiseMode::kAttributeScaled, 1, 1, 0};
  std::vector<double> e0, e1, e2;
  int strict = 0;
  std::vector<uint64_t> broken;
  for (uint64_t seed = 0; seed < kSeedCount; ++seed) {
    e0.push_back(ErrorFor(none, seed));
    e1.push_back(ErrorFor(fixed, seed));
    e2.push_back(ErrorFor(scaled, seed));
    if (e2.back() > e1.back() && e1.back() > e0.back()) {
      ++strict;
    } else {
      broken.push_back(seed);
    }
  }
  const bool means_ordered = Mean(e2) > Mean(e1) && Mean(e1) > Mean(e0);
  Verdict v;
  v.pass = means_ordered && strict >= 16;
  v.detail = fmt::format(
      "means scaled {:.4f} > fixed(0.1) {:.4f} > none {:.4f}: {}; strict "
      "per-seed ordering on {}/20 seeds (need >= 16)",
      Mean(e2), Mean(e1), Mean(e0), means_ordered ? "yes" : "no", strict);
  if (!broken.empty()) {
    v.detail += fmt::format("; not strict at seeds {}", fmt::join(broken, ","));
  }
  return v;
}

Verdict ZeroNoiseIdentity() {
  std::mt19937_64 gen(20261015);
  int equal = 0;
  for (int i = 0; i < 10; ++i) {
    const uint64_t seed = gen();
    auto piped =
        PipelineEvaluate(Iris(), {NoiseMode::kFixed, 0, 0, seed}, BaseCv(seed));
    auto plain = CrossValidate(Iris(), BaseCv(seed));
    if (piped.ok() && plain.ok() && *piped == *plain) ++equal;
  }
  return {equal == 10, fmt::format("{}/10 random seeds bit-exact", equal)};
}

Verdict OracleEquivalence() {
  std::mt19937_64 gen(4242);
  int checked = 0, agree = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const size_t n = 1 + gen() % 30;
    const size_t d = 1 + gen() % 4;
    const int classes = 1 + static_cast<int>(gen() % 4);
    Dataset train = testing::RandomDataset(gen, n, d, classes, trial % 2 == 0);
    std::vector<double> q(d);
    for (double& x : q)
      x = static_cast<double>(static_cast<int>(gen() % 5) - 2);
    const int k = 1 + static_cast<int>(gen() % std::min<size_t>(5, n));
    for (TieRule rule :
         {TieRule::kNearestOfTiedClasses, TieRule::kLowestClassIndex}) {
      auto got = Classify(train, q, {k, rule});
      ++checked;
      if (got.ok() && *got == testing::BruteForceKnn(train, q, k, rule)) {
        ++agree;
      }
    }
  }
  return {
      checked >= 100 && agree == checked,
      fmt::format("{}/{} instances agree (n<=30, d<=4, k<=5)", agree, checked)};
}

Verdict SamplerSoundness() {
  Rng stream(0);
  auto v = *SampleGaussian(stream, 0.0, 1.0, 100000);
  double sum = 0, ss = 0;
  for (double x : v) sum += x;
  const double mean = sum / v.size();
  for (double x : v) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / v.size());
  bool degenerate_ok = true;
  for (double mu : {0.0, 5.0, -2.5}) {
    for (double x : *SampleGaussian(stream, mu, 0.0, 1000)) {
      degenerate_ok = degenerate_ok && x == mu;
    }
  }
  return {std::abs(mean) <= 0.01 && sd >= 0.99 && sd <= 1.01 && degenerate_ok,
          fmt::format("mean {:.5f}, std {:.5f}; sigma=0 exact: {}", mean, sd,
                      degenerate_ok ? "yes" : "no")};
}

Verdict TunerContract() {
  TuneConfig two_step;
  two_step.error_threshold = 0.30;
  two_step.schedule = Schedule::kExplicit;
  two_step.steps = {{NoiseMode::kAttributeScaled, 1, 1, 0},
                    {NoiseMode::kFixed, 0, 0.1, 0}};
  two_step.cv = BaseCv(0);
  auto trace = Tune(Iris(), two_step);
  bool reproduced = trace.ok();
  if (trace.ok()) {
    for (const TuneStep& s : trace->steps) {
      CvConfig cv = two_step.cv;
      cv.seed = s.params.seed;
      auto r = PipelineEvaluate(Iris(), s.params, cv);
      reproduced = reproduced && r.ok() && r->overall_error == s.error &&
                   r->misclassified == s.misclassified;
    }
  }
  const bool first_ok = trace.ok() && trace->steps.size() == 2 &&
                        trace->outcome == TuneOutcome::kMetThreshold &&
                        reproduced;

  const double baseline = CrossValidate(Iris(), BaseCv(0))->overall_error;
  TuneConfig unreachable;
  unreachable.error_threshold = 0.0;
  unreachable.initial = {NoiseMode::kFixed, 0, 0.1, 0};
  unreachable.decay = 0.5;
  unreachable.max_iterations = 5;
  unreachable.cv = BaseCv(0);
  auto exhausted = Tune(Iris(), unreachable);
  const bool second_ok = baseline > 0 && exhausted.ok() &&
                         exhausted->outcome == TuneOutcome::kBudgetExhausted &&
                         exhausted->steps.size() == 5;

  std::string errors;
  if (trace.ok()) {
    for (const TuneStep& s : trace->steps) {
      errors += fmt::format("{}{:.4f}", errors.empty() ? "" : ", ", s.error);
    }
  }
  return {first_ok && second_ok,
          fmt::format(
              "two-step: {} steps, errors [{}], {}, trace reproduced: "
              "{}; tau=0: {} after {} steps (baseline {:.4f} > 0)",
              trace.ok() ? trace->steps.size() : 0, errors,
              trace.ok() ? TuneOutcomeName(trace->outcome) : "error",
              reproduced ? "yes" : "no",
              exhausted.ok() ? TuneOutcomeName(exhausted->outcome) : "error",
              exhausted.ok() ? exhausted->steps.size() : 0, baseline)};
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Verdict CliDeterminism() {
  const fs::path dir = fs::temp_directory_path() / "noisegauge_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::vector<std::string> reports;
  for (const char* name : {"first.report", "second.report"}) {
    const fs::path report = dir / name;
    const std::string cmd = fmt::format(
        "\"{}\" evaluate --in \"{}\" --mode fixed --mean 0 --std 0.1 "
        "--seed 0 --k 1 --folds 10 --out-dir \"{}\" --report \"{}\" "
        "> /dev/null 2>&1",
        NOISEGAUGE_CLI_PATH, testing::IrisPath(), dir.string(),
        report.string());
    if (std::system(cmd.c_str()) != 0) {
      return {false, fmt::format("CLI run failed: {}", cmd)};
    }
    reports.push_back(Slurp(report));
  }
  fs::remove_all(dir);
  const bool same = !reports[0].empty() && reports[0] == reports[1];
  return {same,
          fmt::format("two evaluate reports ({} bytes) byte-identical: {}",
                      reports[0].size(), same ? "yes" : "no")};
}

Verdict MonotoneDegradation() {
  const auto start = Clock::now();
  std::vector<double> means;
  for (double sigma : {0.0, 0.05, 0.1, 0.5}) {
    std::vector<double> errors;
    for (uint64_t seed = 0; seed < kSeedCount; ++seed) {
      errors.push_back(ErrorFor({NoiseMode::kFixed, 0, sigma, 0}, seed));
    }
    means.push_back(Mean(errors));
  }
  bool monotone = true;
  for (size_t i = 1; i < means.size(); ++i) {
    monotone = monotone && means[i] >= means[i - 1];
  }
  const double secs = Seconds(start);
  return {monotone && secs < 30.0,
          fmt::format("mean error at sigma 0/0.05/0.1/0.5 = {:.4f}; "
                      "non-decreasing: {}; {:.2f}s < 30s",
                      fmt::join(means, " / "), monotone ? "yes" : "no", secs)};
}

}  // namespace
}  // namespace noisegauge

int main() {
  using noisegauge::Verdict;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> checks = {
      {"1 baseline fidelity", noisegauge::BaselineFidelity},
      {"2 degradation ordering", noisegauge::DegradationOrdering},
      {"3 zero-noise identity", noisegauge::ZeroNoiseIdentity},
      {"4 oracle equivalence", noisegauge::OracleEquivalence},
      {"5 sampler soundness", noisegauge::SamplerSoundness},
      {"6 tuner contract", noisegauge::TunerContract},
      {"7 CLI determinism", noisegauge::CliDeterminism},
      {"8 monotone degradation", noisegauge::MonotoneDegradation},
  };
  int failures = 0;
  for (const auto& [name, check] : checks) {
    const Verdict v = check();
    if (!v.pass) ++failures;
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << name << ": " << v.detail
              << "\n";
  }
  std::cout << fmt::format("{}/{} criteria passed\n", checks.size() - failures,
                           checks.size());
  return failures == 0 ? 0 : 1;
}
