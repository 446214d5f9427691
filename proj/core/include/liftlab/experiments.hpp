#pragma once

#include <cstdint>
#include <vector>

#include "liftlab/stats.hpp"
#include "liftlab/trials.hpp"

namespace liftlab {

// Monte Carlo checks of the distributional facts the colouring analysis
// relies on. All are deterministic in `seed` and independent of `workers`.

struct CycleCountResult {
  std::size_t h = 0;
  std::size_t trials = 0;
  double mean = 0.0;
  double standard_error = 0.0;
  double expected = 0.0;       // H_h
  double exact_variance = 0.0;  // H_h - sum 1/i^2
  double z = 0.0;               // (mean - expected) / standard_error
};

/// Cycle counts of the composition of k independent uniform permutations
/// of size h.
CycleCountResult cycle_count_experiment(std::size_t h, std::size_t trials, int k, std::uint64_t seed,
                                        std::size_t workers = 1);

struct SurvivalPoint {
  double a = 0.0;
  double empirical = 0.0;
  double reference = 0.0;  // exact law or bound
};

struct ContinuousGapResult {
  std::size_t n = 0;
  std::size_t samples = 0;
  std::vector<TestResult> per_gap;  // KS against 1 - (1-a)^n, one per gap index
  double min_p = 1.0;
  TestResult exchangeability;       // two-sample KS, gap 0 vs gap floor(n/2)
  std::vector<SurvivalPoint> curve;  // pooled over gap indices
};

ContinuousGapResult continuous_gap_experiment(std::size_t n, std::size_t samples, std::uint64_t seed,
                                              std::size_t workers = 1);

/// Frequencies of discrete gaps exceeding aN/n, pooled over the n+1 gap
/// indices, for each (a, N). Multiplier 1.
std::vector<BoundPoint> discrete_gap_frequencies(std::size_t n, const std::vector<std::int64_t>& Ns,
                                                 const std::vector<double>& as, std::size_t samples,
                                                 std::uint64_t seed, std::size_t workers = 1);

/// Frequencies of a uniform n-subset of {1..N} missing ceil(aN/n)
/// consecutive integers. Multiplier n+1.
std::vector<BoundPoint> subset_gap_frequencies(std::size_t n, const std::vector<std::int64_t>& Ns,
                                               const std::vector<double>& as, std::size_t samples,
                                               std::uint64_t seed, std::size_t workers = 1);

struct BoundCheck {
  double c = 0.0;
  std::vector<BoundPoint> calibration;
  std::vector<BoundPoint> held_out;
  std::size_t violations = 0;  // held-out points above the fitted bound
};

/// Fits c on the calibration points and counts held-out violations.
BoundCheck check_bound(std::vector<BoundPoint> calibration, std::vector<BoundPoint> held_out);

struct CouplingResult {
  std::size_t samples = 0;
  std::size_t pathwise_violations = 0;  // discrete gap > N * continuous gap + 2
  TestResult marginal;                  // rounded vs directly drawn, middle gap
};

CouplingResult coupling_experiment(std::size_t n, std::int64_t N, std::size_t samples, std::uint64_t seed);

struct UniformityResult {
  std::size_t draws = 0;
  TestResult ks;          // randomised PIT of draw ranks vs Uniform(0,1)
  TestResult chi_square;  // same values in 10 equal bins
};

/// Phase II draw ranks at lift size h over `trials` trials.
UniformityResult draw_uniformity_experiment(int k, int s, std::size_t h, std::size_t trials,
                                            std::uint64_t seed, std::size_t workers = 1);

struct ExchangeabilityResult {
  HSummary lazy;
  HSummary upfront;
  double success_z = 0.0;
  double cycles_z = 0.0;
};

/// Same lift size under lazy and upfront exposure, on independent seed
/// streams.
ExchangeabilityResult exchangeability_experiment(int k, int s, std::size_t h, std::size_t trials,
                                                 std::uint64_t seed, std::size_t workers = 1);

/// True if the rate at every larger h is at most the rate at each smaller h
/// or their Wilson intervals overlap.
bool nonincreasing_up_to_overlap(const std::vector<EstimateCI>& rates);

}  // namespace liftlab
