#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "liftlab/base_graph.hpp"
#include "liftlab/colouring.hpp"
#include "liftlab/stats.hpp"

namespace liftlab {

class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  int k = 3;
  int s = 2;
  std::vector<std::size_t> h_values;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  std::size_t workers = 1;
  /// Upper bound on sum over h of h * trials.
  double max_work = 1e11;
  RunOptions run_options;
};

/// Seed of trial `index` at lift size h: derive_seed(master, h, index).
std::uint64_t trial_seed(std::uint64_t master, std::size_t h, std::size_t index);

/// Aggregates for one lift size. Every field merges commutatively.
struct HSummary {
  std::size_t h = 0;
  std::size_t trials = 0;
  std::array<std::size_t, kTrialStatusCount> status_counts{};
  RunningStats cycles;
  RunningStats iterations;
  RunningStats max_chunk;
  RunningStats chunk_cycles;
  std::size_t chunk_trials = 0;  // trials whose Phase II completed
  std::size_t chunk_cyclic = 0;
  std::size_t max_chunk_violations = 0;
  std::size_t early_stops = 0;
  std::size_t improper_successes = 0;  // Success without a proper 3-colouring

  void add(const TrialOutcome& outcome);
  void merge(const HSummary& other);

  std::size_t count(TrialStatus s) const { return status_counts[static_cast<std::size_t>(s)]; }
  EstimateCI rate(TrialStatus s) const { return wilson_interval(count(s), trials); }
  EstimateCI max_chunk_violation_rate() const {
    return wilson_interval(max_chunk_violations, chunk_trials);
  }
};

/// Runs `trials` independent trials for every h in the config. Outcomes are
/// delivered to `on_record` in (h, index) order whatever the worker count.
/// Throws ResourceCapExceeded before sampling when the work bound is hit,
/// and std::invalid_argument for trials == 0.
std::vector<HSummary> run_trials(const SweepConfig& config,
                                 const std::function<void(const TrialOutcome&)>& on_record = {});

}  // namespace liftlab
