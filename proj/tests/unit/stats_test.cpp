#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "liftlab/experiments.hpp"
#include "liftlab/stats.hpp"

namespace liftlab {
namespace {

TEST(Stats, GapSurvival) {
  EXPECT_DOUBLE_EQ(gap_survival(7, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(gap_survival(7, 1.0), 0.0);
  EXPECT_NEAR(gap_survival(3, 0.2), 0.512, 1e-12);
  EXPECT_THROW(gap_survival(3, -0.1), std::domain_error);
  EXPECT_THROW(gap_survival(3, 1.5), std::domain_error);
}

TEST(Stats, ContinuousGapsSumToOne) {
  Rng rng(1);
  for (std::size_t n : {1U, 2U, 10U, 100U}) {
    const auto g = sample_continuous_gaps(n, rng);
    ASSERT_EQ(g.gaps.size(), n + 1);
    EXPECT_NEAR(std::accumulate(g.gaps.begin(), g.gaps.end(), 0.0), 1.0, 1e-12);
    for (double x : g.gaps) EXPECT_GE(x, 0.0);
  }
}

TEST(Stats, SingleAndDoublePointGapLaw) {
  Rng rng(2);
  constexpr std::size_t kSamples = 100000;
  std::size_t one = 0;
  std::size_t two = 0;
  for (std::size_t i = 0; i < kSamples; ++i) {
    one += sample_continuous_gaps(1, rng).gaps[0] > 0.5;
    two += sample_continuous_gaps(2, rng).gaps[1] > 0.5;
  }
  const EstimateCI a = wilson_interval(one, kSamples);
  const EstimateCI b = wilson_interval(two, kSamples);
  EXPECT_LE(a.lower, 0.5);
  EXPECT_GE(a.upper, 0.5);
  EXPECT_LE(b.lower, 0.25);
  EXPECT_GE(b.upper, 0.25);
}

TEST(Stats, DiscreteGaps) {
  Rng rng(3);
  const auto trivial = sample_discrete_gaps(5, 1, rng);
  EXPECT_EQ(trivial.gaps, (std::vector<std::int64_t>{1, 0, 0, 0, 0, 0}));
  for (int i = 0; i < 100; ++i) {
    const auto g = sample_discrete_gaps(50, 1000, rng);
    EXPECT_EQ(std::accumulate(g.gaps.begin(), g.gaps.end(), std::int64_t{0}), 1000);
    for (auto x : g.gaps) EXPECT_GE(x, 0);
  }
}

TEST(Stats, CouplingHoldsPathwise) {
  const CouplingResult r = coupling_experiment(100, 10000, 5000, 4);
  EXPECT_EQ(r.pathwise_violations, 0U);
  EXPECT_GT(r.marginal.p_value, 0.01);
}

TEST(Stats, SubsetSampling) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto r = sample_subset(30, 100, rng);
    ASSERT_EQ(r.size(), 30U);
    EXPECT_TRUE(std::is_sorted(r.begin(), r.end()));
    EXPECT_EQ(std::adjacent_find(r.begin(), r.end()), r.end());
    EXPECT_GE(r.front(), 1);
    EXPECT_LE(r.back(), 100);
  }
  // Each element is included with probability n/N.
  std::vector<std::size_t> counts(10, 0);
  for (int i = 0; i < 30000; ++i)
    for (auto x : sample_subset(3, 10, rng)) counts[static_cast<std::size_t>(x - 1)]++;
  EXPECT_GT(chi_square_uniform(counts).p_value, 0.01);
}

TEST(Stats, LongestGapRun) {
  const std::vector<std::int64_t> r = {3, 4, 9};
  EXPECT_EQ(longest_gap_run(r, 10), 4);
  EXPECT_EQ(longest_gap_run(std::vector<std::int64_t>{}, 10), 10);
  const std::vector<std::int64_t> all = {1, 2, 3};
  EXPECT_EQ(longest_gap_run(all, 3), 0);
}

TEST(Stats, SubsetGapEventEdgeCases) {
  Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    EXPECT_FALSE(subset_gap_event(20, 20, 0.5, rng));
    EXPECT_FALSE(subset_gap_event(5, 100, 1000.0, rng));
  }
  EXPECT_THROW(subset_gap_event(0, 10, 1.0, rng), std::invalid_argument);
  EXPECT_THROW(subset_gap_event(11, 10, 1.0, rng), std::invalid_argument);
}

TEST(Stats, WilsonInterval) {
  const EstimateCI zero = wilson_interval(0, 100);
  EXPECT_EQ(zero.estimate, 0.0);
  EXPECT_EQ(zero.lower, 0.0);
  EXPECT_GT(zero.upper, 0.0);
  const EstimateCI half = wilson_interval(50, 100);
  EXPECT_NEAR(half.lower, 0.40383, 1e-4);
  EXPECT_NEAR(half.upper, 0.59617, 1e-4);
  for (std::size_t s = 0; s <= 20; ++s) {
    const EstimateCI ci = wilson_interval(s, 20);
    EXPECT_LE(ci.lower, ci.estimate);
    EXPECT_GE(ci.upper, ci.estimate);
    EXPECT_GE(ci.lower, 0.0);
    EXPECT_LE(ci.upper, 1.0);
  }
}

TEST(Stats, KolmogorovTail) {
  EXPECT_NEAR(kolmogorov_tail(1.0), 0.26999967, 1e-6);
  EXPECT_NEAR(kolmogorov_tail(1.36), 0.0494, 1e-3);
  EXPECT_DOUBLE_EQ(kolmogorov_tail(0.0), 1.0);
}

TEST(Stats, KsTestCalibrationAndPower) {
  auto uniform_cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
  Rng rng(7);
  std::size_t rejections = 0;
  constexpr int kRuns = 1000;
  for (int run = 0; run < kRuns; ++run) {
    std::vector<double> xs(200);
    for (auto& x : xs) x = uniform_unit(rng);
    rejections += ks_test(xs, uniform_cdf).p_value < 0.01;
  }
  // About 1% of runs reject; 3 binomial standard deviations either way.
  EXPECT_LE(rejections, 10U + 3 * 3);

  std::vector<double> shifted(10000);
  for (auto& x : shifted) x = std::min(1.0, uniform_unit(rng) + 0.05);
  EXPECT_LT(ks_test(shifted, uniform_cdf).p_value, 0.01);

  EXPECT_THROW(ks_test(std::vector<double>(29, 0.5), uniform_cdf), std::invalid_argument);
}

TEST(Stats, TwoSampleKs) {
  Rng rng(8);
  std::vector<double> a(5000), b(5000), c(5000);
  for (auto& x : a) x = uniform_unit(rng);
  for (auto& x : b) x = uniform_unit(rng);
  for (auto& x : c) x = uniform_unit(rng) * 0.9;
  EXPECT_GT(ks_two_sample(a, b).p_value, 0.01);
  EXPECT_LT(ks_two_sample(a, c).p_value, 0.01);
}

TEST(Stats, ChiSquare) {
  const std::vector<std::size_t> flat = {100, 100, 100, 100};
  EXPECT_NEAR(chi_square_uniform(flat).statistic, 0.0, 1e-12);
  EXPECT_NEAR(chi_square_uniform(flat).p_value, 1.0, 1e-12);
  const std::vector<std::size_t> skew = {10, 20};
  const std::vector<double> expected = {15.0, 15.0};
  const TestResult r = chi_square(skew, expected);
  EXPECT_NEAR(r.statistic, 10.0 / 3.0, 1e-12);
  EXPECT_NEAR(r.p_value, std::erfc(std::sqrt(10.0 / 3.0 / 2.0)), 1e-9);
}

TEST(Stats, HarmonicNumbers) {
  long double h100 = 0.0L;
  for (int i = 1; i <= 100; ++i) h100 += 1.0L / i;
  EXPECT_NEAR(harmonic(100), static_cast<double>(h100), 1e-12);
  EXPECT_NEAR(harmonic(100), 5.187377517639621, 1e-12);
  EXPECT_NEAR(harmonic(1000), 7.485470860550345, 1e-12);
  EXPECT_NEAR(harmonic2(1), 1.0, 1e-15);
  EXPECT_NEAR(harmonic2(2), 1.25, 1e-15);
}

TEST(Stats, Spearman) {
  std::vector<std::pair<double, double>> up = {{1, 2}, {2, 3}, {3, 10}, {4, 11}};
  EXPECT_NEAR(spearman(up), 1.0, 1e-12);
  std::vector<std::pair<double, double>> down = {{1, 4}, {2, 3}, {3, 2}, {4, 1}};
  EXPECT_NEAR(spearman(down), -1.0, 1e-12);
}

TEST(Stats, RunningStatsMergeMatchesSequential) {
  Rng rng(9);
  RunningStats all, left, right;
  for (int i = 0; i < 1000; ++i) {
    const double x = uniform_unit(rng) * 10;
    all.add(x);
    (i % 3 ? left : right).add(x);
  }
  RunningStats merged = right;
  merged.merge(left);
  EXPECT_EQ(merged.count(), all.count());
  EXPECT_NEAR(merged.mean(), all.mean(), 1e-12);
  EXPECT_NEAR(merged.variance(), all.variance(), 1e-9);
}

TEST(Stats, FittedBoundConstant) {
  std::vector<BoundPoint> pts = {{1.0, 100, 1000, 1.0, std::exp(-1.0 + 0.5 * 0.1)},
                                 {2.0, 100, 1000, 1.0, 0.0}};
  const double c = fit_bound_constant(pts);
  EXPECT_NEAR(c, 0.5, 1e-9);
  EXPECT_NEAR(bound_value(pts[0], c), pts[0].frequency, 1e-12);
  const std::vector<BoundPoint> below = {{1.0, 100, 1000, 1.0, 0.1}};
  EXPECT_EQ(fit_bound_constant(below), 0.0);
}

TEST(Stats, CycleCountMeanIsHarmonicAtHundred) {
  const CycleCountResult r = cycle_count_experiment(100, 10000, 3, 11);
  EXPECT_NEAR(r.expected, 5.187377517639621, 1e-12);
  EXPECT_LE(std::abs(r.z), 3.0);
}

TEST(Stats, SingleTrialCannotConfirmTheMean) {
  const CycleCountResult r = cycle_count_experiment(1000, 1, 3, 11);
  EXPECT_EQ(r.standard_error, 0.0);
  EXPECT_TRUE(std::isinf(r.z));
}

TEST(Stats, ContinuousGapsAreExchangeable) {
  const ContinuousGapResult r = continuous_gap_experiment(20, 4000, 12);
  EXPECT_EQ(r.per_gap.size(), 21U);
  EXPECT_GT(r.exchangeability.p_value, 0.01);
  for (const auto& p : r.curve) EXPECT_NEAR(p.empirical, p.reference, 0.02);
}

TEST(Stats, TrendHelper) {
  EXPECT_TRUE(nonincreasing_up_to_overlap({wilson_interval(50, 100), wilson_interval(10, 100)}));
  EXPECT_TRUE(nonincreasing_up_to_overlap({wilson_interval(10, 100), wilson_interval(12, 100)}));
  EXPECT_FALSE(nonincreasing_up_to_overlap({wilson_interval(10, 100), wilson_interval(50, 100)}));
}

}  // namespace
}  // namespace liftlab
