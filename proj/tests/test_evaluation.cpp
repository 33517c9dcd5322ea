#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "aprop/errors.hpp"
#include "aprop/evaluation.hpp"
#include "aprop/generators.hpp"
#include "oracles.hpp"

using namespace aprop;

namespace {

void expect_same(const Metrics& a, const Metrics& b) {
  ASSERT_EQ(a.folds.size(), b.folds.size());
  for (std::size_t k = 0; k < a.folds.size(); ++k) {
    EXPECT_EQ(a.folds[k].test_rows, b.folds[k].test_rows);
    EXPECT_EQ(a.folds[k].correct, b.folds[k].correct);
    EXPECT_EQ(a.folds[k].abstained, b.folds[k].abstained);
    EXPECT_EQ(a.folds[k].triplets_examined, b.folds[k].triplets_examined);
  }
  EXPECT_EQ(a.mean_accuracy, b.mean_accuracy);
  EXPECT_EQ(a.std_accuracy, b.std_accuracy);
  EXPECT_EQ(a.triplets_examined, b.triplets_examined);
}

}  // namespace

TEST(Names, RoundTrip) {
  for (auto s : {Strategy::Baseline, Strategy::Selected, Strategy::Bongard, Strategy::Knn, Strategy::Constant})
    EXPECT_EQ(parse_strategy(to_string(s)), s);
  EXPECT_EQ(parse_fallback("none"), Fallback::None);
  EXPECT_THROW(parse_strategy("forest"), ConfigError);
}

TEST(Validate, RejectsBadParameters) {
  EvalParams p;
  p.subsample = 0.0;
  EXPECT_THROW(validate(p), ConfigError);
  p = {};
  p.k = 0;
  EXPECT_THROW(validate(p), ConfigError);
  p = {};
  p.mining.min_confidence = 2.0;
  EXPECT_THROW(validate(p), ConfigError);
  EXPECT_NO_THROW(validate(EvalParams{}));
}

TEST(Folds, StratifiedPartition) {
  const Dataset data = generate_monk(2);
  bool stratified = false;
  std::vector<std::string> warnings;
  const auto folds = make_folds(data, 10, 42, stratified, warnings);
  EXPECT_TRUE(stratified);
  EXPECT_TRUE(warnings.empty());
  ASSERT_EQ(folds.size(), 10U);
  std::set<std::size_t> seen;
  std::size_t positives = 0;
  for (const auto& f : folds) positives += std::count_if(f.begin(), f.end(), [&](auto r) { return data.label(r).code; });
  for (const auto& f : folds) {
    EXPECT_GE(f.size(), 43U);
    EXPECT_LE(f.size(), 44U);
    seen.insert(f.begin(), f.end());
    // class shares per fold within one row of the global share
    const double share = static_cast<double>(positives) / static_cast<double>(data.size());
    const auto pos = std::count_if(f.begin(), f.end(), [&](auto r) { return data.label(r).code; });
    EXPECT_LE(std::abs(static_cast<double>(pos) - share * static_cast<double>(f.size())), 1.0);
  }
  EXPECT_EQ(seen.size(), data.size());
}

TEST(Folds, SmallClassFallsBackWithWarning) {
  std::vector<std::pair<std::vector<int>, int>> rows;
  for (int i = 0; i < 20; ++i) rows.push_back({{i & 1, (i >> 1) & 1, (i >> 2) & 1}, i == 0 ? 1 : 0});
  const Dataset data = oracle::binary_dataset(3, rows);
  bool stratified = true;
  std::vector<std::string> warnings;
  const auto folds = make_folds(data, 5, 1, stratified, warnings);
  EXPECT_FALSE(stratified);
  EXPECT_EQ(warnings.size(), 1U);
  std::size_t total = 0;
  for (const auto& f : folds) total += f.size();
  EXPECT_EQ(total, 20U);
}

TEST(Folds, SeedChangesTheShuffle) {
  const Dataset data = generate_monk(1);
  bool s;
  std::vector<std::string> w;
  EXPECT_EQ(make_folds(data, 10, 5, s, w), make_folds(data, 10, 5, s, w));
  EXPECT_NE(make_folds(data, 10, 5, s, w), make_folds(data, 10, 6, s, w));
}

TEST(CrossValidate, ConstantStrategyGivesMajorityFrequency) {
  const Dataset data = generate_monk(2);
  EvalParams p;
  p.strategy = Strategy::Constant;
  const Metrics m = cross_validate(data, p, 10, 3);
  std::size_t zeros = 0;
  for (auto l : data.labels()) zeros += l.code == 0;
  const double majority = static_cast<double>(std::max(zeros, data.size() - zeros)) / static_cast<double>(data.size());
  EXPECT_NEAR(m.pooled_accuracy, majority, 1e-12);
}

TEST(CrossValidate, AggregatesFromFolds) {
  const Dataset data = generate_balance();
  EvalParams p;
  p.strategy = Strategy::Knn;
  p.k = 5;
  const Metrics m = cross_validate(data, p, 10, 8);
  double sum = 0.0;
  std::size_t correct = 0;
  for (const auto& f : m.folds) {
    EXPECT_DOUBLE_EQ(f.accuracy, static_cast<double>(f.correct) / static_cast<double>(f.test_rows.size()));
    sum += f.accuracy;
    correct += f.correct;
  }
  const double mean = sum / 10.0;
  double ss = 0.0;
  for (const auto& f : m.folds) ss += (f.accuracy - mean) * (f.accuracy - mean);
  EXPECT_NEAR(m.mean_accuracy, mean, 1e-12);
  EXPECT_NEAR(m.std_accuracy, std::sqrt(ss / 9.0), 1e-12);
  EXPECT_NEAR(m.pooled_accuracy, static_cast<double>(correct) / static_cast<double>(data.size()), 1e-12);
}

TEST(CrossValidate, DeterministicAcrossRunsAndWorkers) {
  const Dataset data = generate_monk(3);
  for (Strategy s : {Strategy::Selected, Strategy::Bongard}) {
    EvalParams p;
    p.strategy = s;
    p.subsample = 0.5;
    const Metrics one = cross_validate(data, p, 10, 11, 1);
    expect_same(one, cross_validate(data, p, 10, 11, 1));
    expect_same(one, cross_validate(data, p, 10, 11, 4));
    expect_same(one, cross_validate(data, p, 10, 11, 16));
  }
}

TEST(CrossValidate, MonkThreeBaselineNearReportedAccuracy) {
  EvalParams p;
  p.strategy = Strategy::Baseline;
  const Metrics m = cross_validate(generate_monk(3), p, 10, 1, 4);
  EXPECT_NEAR(100.0 * m.mean_accuracy, 95.28, 5.0);
}

TEST(CrossValidate, FewerRowsThanFoldsIsAnError) {
  const Dataset data = oracle::binary_dataset(1, {{{0}, 0}, {{1}, 1}, {{1}, 1}});
  EXPECT_THROW(cross_validate(data, {}, 5, 1), ConfigError);
  EXPECT_THROW(cross_validate(data, {}, 1, 1), ConfigError);
}

TEST(Resubstitution, KnnOneIsPerfectOnDistinctRows) {
  EvalParams p;
  p.strategy = Strategy::Knn;
  const Metrics m = resubstitution(generate_monk(2), p, 0);
  EXPECT_DOUBLE_EQ(m.mean_accuracy, 1.0);
}

TEST(GridSearch, PicksHighestMeanThenSmallestK) {
  const Dataset data = generate_monk(2);
  EvalParams p;
  p.strategy = Strategy::Knn;
  const GridResult g = grid_search_k(data, p, {1, 3, 5, 7, 9, 11}, 10, 1);
  ASSERT_EQ(g.runs.size(), 6U);
  for (const auto& r : g.runs) {
    EXPECT_LE(r.metrics.mean_accuracy, g.runs[g.best].metrics.mean_accuracy);
    if (r.metrics.mean_accuracy == g.runs[g.best].metrics.mean_accuracy) EXPECT_GE(r.k, g.runs[g.best].k);
  }
  EXPECT_NEAR(100.0 * g.runs[g.best].metrics.mean_accuracy, 64.44, 10.0);
}

TEST(EvaluateSplit, AbstentionFallsBackToNearestNeighbor) {
  const Dataset train = oracle::binary_dataset(3, {{{0, 0, 0}, 0}, {{0, 1, 1}, 1}});
  const Dataset test = oracle::binary_dataset(3, {{{1, 0, 0}, 0}});
  EvalParams p;
  p.strategy = Strategy::Baseline;
  const FoldResult with = evaluate_split(train, test, p, 0);
  EXPECT_EQ(with.abstained, 1U);
  EXPECT_EQ(with.correct, 1U);
  p.fallback = Fallback::None;
  EXPECT_EQ(evaluate_split(train, test, p, 0).correct, 0U);
}
