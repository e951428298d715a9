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

#include "noisegauge/evaluate.h"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "testing/oracles.h"

namespace noisegauge {
namespace {

TEST(ClassificationErrorTest, Examples) {
  std::vector<int> truth(150, 0), pred(150, 0);
  for (int i = 0; i < 6; ++i) pred[i * 20] = 1;
  EXPECT_EQ(*ClassificationError(pred, truth), 6.0 / 150.0);
  EXPECT_DOUBLE_EQ(*ClassificationError(pred, truth), 0.04);
  for (int i = 0; i < 48; ++i) pred[i] = 2;
  // Indices 0, 20 and 40 were already wrong, 60/80/100 still are.
  EXPECT_DOUBLE_EQ(*ClassificationError(pred, truth), 51.0 / 150.0);
  std::fill(pred.begin(), pred.end(), 0);
  for (int i = 0; i < 48; ++i) pred[i] = 1;
  EXPECT_DOUBLE_EQ(*ClassificationError(pred, truth), 0.32);
  EXPECT_EQ(*ClassificationError(truth, truth), 0.0);
}

TEST(ClassificationErrorTest, Errors) {
  std::vector<int> a = {0, 1}, b = {0};
  EXPECT_EQ(ClassificationError(a, b).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(ClassificationError({}, {}).status().code(),
            absl::StatusCode::kFailedPrecondition);
}

Dataset TwoClusters() {
  std::vector<double> f;
  std::vector<int> labels;
  for (int i = 0; i < 10; ++i) {
    f.insert(f.end(), {0.1 * i, 0.0});
    labels.push_back(0);
    f.insert(f.end(), {100 + 0.1 * i, 100.0});
    labels.push_back(1);
  }
  return *Dataset::Create(f, 2, labels, {"x", "y"}, {"A", "B"});
}

TEST(CrossValidateTest, SeparatedClustersHaveZeroError) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    auto r = CrossValidate(TwoClusters(), {{1}, 5, seed, true});
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r->misclassified, 0);
    EXPECT_EQ(r->overall_error, 0.0);
  }
}

// Records on a line: 0:(0)A 1:(4)B 2:(6)A 3:(10)B. With two stratified folds
// each fold holds one A and one B. If records 0 and 1 share a fold the
// predictions are A,A,B,B, otherwise B,A,B,A.
TEST(CrossValidateTest, FourRecordHandCheck) {
  Dataset d =
      *Dataset::Create({0, 4, 6, 10}, 1, {0, 1, 0, 1}, {"x"}, {"A", "B"});
  bool saw_same = false, saw_split = false;
  for (uint64_t seed = 0; seed < 32; ++seed) {
    auto r = CrossValidate(d, {{1}, 2, seed, true});
    ASSERT_TRUE(r.ok());
    const auto& fold = r->folds.fold_of;
    ASSERT_NE(fold[0], fold[2]);
    ASSERT_NE(fold[1], fold[3]);
    if (fold[0] == fold[1]) {
      saw_same = true;
      EXPECT_EQ(r->predictions, (std::vector<int>{0, 0, 1, 1}));
      EXPECT_EQ(r->misclassified, 2);
    } else {
      saw_split = true;
      EXPECT_EQ(r->predictions, (std::vector<int>{1, 0, 1, 0}));
      EXPECT_EQ(r->misclassified, 4);
      EXPECT_EQ(r->overall_error, 1.0);
    }
  }
  EXPECT_TRUE(saw_same);
  EXPECT_TRUE(saw_split);
}

TEST(CrossValidateTest, AggregationInvariants) {
  std::mt19937_64 gen(77);
  for (int trial = 0; trial < 60; ++trial) {
    const size_t n = 6 + gen() % 40;
    Dataset d =
        testing::RandomDataset(gen, n, 1 + gen() % 3, 2, trial % 3 == 0);
    const int folds = 2 + static_cast<int>(gen() % 4);
    const int k = 1 + static_cast<int>(gen() % 3);
    auto r = CrossValidate(d, {{k}, folds, gen(), false});
    ASSERT_TRUE(r.ok()) << r.status();

    int64_t total = 0, wrong = 0;
    for (size_t t = 0; t < r->confusion.size(); ++t) {
      for (size_t p = 0; p < r->confusion[t].size(); ++p) {
        total += r->confusion[t][p];
        if (t != p) wrong += r->confusion[t][p];
      }
    }
    EXPECT_EQ(total, static_cast<int64_t>(n));
    EXPECT_EQ(wrong, r->misclassified);
    EXPECT_EQ(r->overall_error, static_cast<double>(wrong) / n);

    double weighted = 0;
    for (int f = 0; f < folds; ++f) {
      weighted += r->per_fold_error[f] * r->folds.Members(f).size();
    }
    EXPECT_NEAR(weighted / n, r->overall_error, 1e-12);

    int64_t recount = 0;
    for (size_t i = 0; i < n; ++i) recount += r->predictions[i] != d.label(i);
    EXPECT_EQ(recount, r->misclassified);
  }
}

TEST(CrossValidateTest, PredictionsMatchManualFoldLoop) {
  auto iris = *LoadCsvFile(testing::IrisPath());
  CvConfig cfg{{3}, 10, 5, true};
  auto r = CrossValidate(iris, cfg);
  ASSERT_TRUE(r.ok());
  for (int f = 0; f < 10; ++f) {
    Dataset train = iris.Subset(r->folds.NonMembers(f));
    for (size_t i : r->folds.Members(f)) {
      EXPECT_EQ(r->predictions[i], *Classify(train, iris.row(i), cfg.knn));
    }
  }
  EXPECT_EQ(r->folds, *SplitFolds(iris, 10, 5, true));
}

TEST(CrossValidateTest, Deterministic) {
  auto iris = *LoadCsvFile(testing::IrisPath());
  for (uint64_t seed : {0u, 1u, 19u}) {
    EXPECT_EQ(*CrossValidate(iris, {{1}, 10, seed, true}),
              *CrossValidate(iris, {{1}, 10, seed, true}));
  }
}

TEST(CrossValidateTest, ConfigErrors) {
  auto iris = *LoadCsvFile(testing::IrisPath());
  EXPECT_FALSE(CrossValidate(iris, {{0}, 10, 0, true}).ok());
  EXPECT_FALSE(CrossValidate(iris, {{1}, 1, 0, true}).ok());
  EXPECT_FALSE(CrossValidate(iris, {{1}, 151, 0, false}).ok());
  EXPECT_FALSE(CrossValidate(iris, {{1}, 51, 0, true}).ok());
  EXPECT_FALSE(CrossValidate(iris, {{136}, 10, 0, true}).ok());
}

TEST(PipelineEvaluateTest, ZeroNoiseEqualsPlainCrossValidation) {
  auto iris = *LoadCsvFile(testing::IrisPath());
  for (uint64_t seed = 0; seed < 5; ++seed) {
    CvConfig cfg{{1}, 10, seed, true};
    auto piped = PipelineEvaluate(iris, {NoiseMode::kFixed, 0, 0, seed}, cfg);
    ASSERT_TRUE(piped.ok());
    EXPECT_EQ(*piped, *CrossValidate(iris, cfg));
  }
}

TEST(PipelineEvaluateTest, MatchesManualPrivatizeThenValidate) {
  auto iris = *LoadCsvFile(testing::IrisPath());
  NoiseParams noise{NoiseMode::kFixed, 0.0, 0.3, 4};
  CvConfig cfg{{1}, 10, 4, true};
  auto z = Privatize(iris, noise);
  ASSERT_TRUE(z.ok());
  EXPECT_EQ(*PipelineEvaluate(iris, noise, cfg), *CrossValidate(*z, cfg));
}

TEST(PipelineEvaluateTest, OriginalTestRowsUsePrivatizedTrainingOnly) {
  auto iris = *LoadCsvFile(testing::IrisPath());
  NoiseParams noise{NoiseMode::kAttributeScaled, 1.0, 1.0, 2};
  CvConfig cfg{{1}, 10, 2, true};
  auto r = PipelineEvaluate(iris, noise, cfg, TestSource::kOriginal);
  ASSERT_TRUE(r.ok());
  Dataset z = *Privatize(iris, noise);
  for (int f = 0; f < 10; ++f) {
    Dataset train = z.Subset(r->folds.NonMembers(f));
    for (size_t i : r->folds.Members(f)) {
      EXPECT_EQ(r->predictions[i], *Classify(train, iris.row(i), cfg.knn));
    }
  }
}

TEST(PipelineEvaluateTest, NoiseErrorsPropagate) {
  auto iris = *LoadCsvFile(testing::IrisPath());
  EXPECT_EQ(
      PipelineEvaluate(iris, {NoiseMode::kFixed, 0, -1, 0}, {}).status().code(),
      absl::StatusCode::kInvalidArgument);
}

}  // namespace
}  // namespace noisegauge
