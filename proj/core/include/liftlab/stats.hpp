#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "liftlab/rng.hpp"

namespace liftlab {

/// n+1 spacings of n uniform points on [0,1], boundaries 0 and 1.
struct ContinuousGaps {
  std::size_t n = 0;
  std::vector<double> gaps;
};

/// n+1 spacings of n draws from {1..N} (with replacement), boundaries
/// S_0 = 0 and S_{n+1} = N. Gaps sum to N.
struct DiscreteGaps {
  std::size_t n = 0;
  std::int64_t N = 0;
  std::vector<std::int64_t> gaps;
};

ContinuousGaps sample_continuous_gaps(std::size_t n, Rng& rng);

/// P[gap > a] = (1-a)^n, the same for every gap index. Throws
/// std::domain_error unless 0 <= a <= 1.
double gap_survival(std::size_t n, double a);

DiscreteGaps sample_discrete_gaps(std::size_t n, std::int64_t N, Rng& rng);

/// Draws X_1..X_n uniform on (0,1] and sets Y_j = ceil(N X_j), keeping the
/// same ordering permutation for both. Pathwise each discrete gap is at most
/// N times the continuous one plus 2.
std::pair<ContinuousGaps, DiscreteGaps> sample_coupled_gaps(std::size_t n, std::int64_t N, Rng& rng);

/// Uniform n-subset of {1..N} in increasing order (Floyd's algorithm).
std::vector<std::int64_t> sample_subset(std::size_t n, std::int64_t N, Rng& rng);

/// Longest run of consecutive integers in {1..N} avoiding the sorted set.
std::int64_t longest_gap_run(std::span<const std::int64_t> sorted_subset, std::int64_t N);

/// Whether a uniform n-subset of {1..N} misses ceil(aN/n) consecutive
/// integers. Throws std::invalid_argument unless 1 <= n <= N and a > 0.
bool subset_gap_event(std::size_t n, std::int64_t N, double a, Rng& rng);

/// Point estimate with a 95% Wilson score interval.
struct EstimateCI {
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::size_t successes = 0;
  std::size_t trials = 0;

  bool overlaps(const EstimateCI& other) const {
    return lower <= other.upper && other.lower <= upper;
  }
};

EstimateCI wilson_interval(std::size_t successes, std::size_t trials, double z = 1.959963984540054);

struct TestResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// Asymptotic Kolmogorov distribution tail Q(lambda) = P[K > lambda].
double kolmogorov_tail(double lambda);

/// One-sample Kolmogorov-Smirnov test against a continuous cdf; p-value via
/// the Stephens-corrected asymptotic tail. Throws std::invalid_argument for
/// fewer than 30 samples.
TestResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov test.
TestResult ks_two_sample(std::span<const double> a, std::span<const double> b);

/// Pearson chi-square test of counts against equal expected frequencies.
TestResult chi_square_uniform(std::span<const std::size_t> counts);

/// Pearson chi-square test against given expected counts.
TestResult chi_square(std::span<const std::size_t> observed, std::span<const double> expected);

/// H_h = sum_{i=1..h} 1/i, the mean cycle count of a uniform permutation
/// of h points.
double harmonic(std::size_t h);

/// sum_{i=1..h} 1/i^2; H_h minus this is the cycle-count variance.
double harmonic2(std::size_t h);

/// Spearman rank correlation with average ranks for ties.
double spearman(std::span<const std::pair<double, double>> pairs);

/// Streaming mean/variance (Welford) with an order-independent merge.
class RunningStats {
 public:
  void add(double x);
  void merge(const RunningStats& other);
  std::size_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
  double standard_error() const;

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// An empirical exceedance frequency paired with the point of the bound
/// multiplier * exp(-a + c n / N) it is checked against.
struct BoundPoint {
  double a = 0.0;
  std::size_t n = 0;
  std::int64_t N = 0;
  double multiplier = 1.0;
  double frequency = 0.0;
};

/// Smallest c >= 0 with frequency <= multiplier * exp(-a + c n/N) at every
/// calibration point (points with zero frequency impose nothing).
double fit_bound_constant(std::span<const BoundPoint> calibration);

double bound_value(const BoundPoint& p, double c);

}  // namespace liftlab
