#include "liftlab/trials.hpp"

#include <algorithm>
#include <optional>

#include "liftlab/parallel.hpp"

namespace liftlab {

std::uint64_t trial_seed(std::uint64_t master, std::size_t h, std::size_t index) {
  return derive_seed(master, h, index);
}

void HSummary::add(const TrialOutcome& o) {
  ++trials;
  ++status_counts[static_cast<std::size_t>(o.status)];
  cycles.add(static_cast<double>(o.stats.cycles));
  if (o.status != TrialStatus::FailPhase1TooManyCycles && o.status != TrialStatus::FailStep3DoubleRed)
    iterations.add(static_cast<double>(o.stats.iterations));
  if (o.stats.max_chunk) {
    ++chunk_trials;
    max_chunk.add(static_cast<double>(*o.stats.max_chunk));
    chunk_cycles.add(static_cast<double>(*o.stats.chunk_cycles));
    chunk_cyclic += *o.stats.chunk_graph_cyclic;
    max_chunk_violations += *o.stats.max_chunk_exceeds;
  }
  early_stops += o.stats.stopped_early;
  if (o.status == TrialStatus::Success && !(o.stats.verified_proper && o.stats.colours_used == 3))
    ++improper_successes;
}

void HSummary::merge(const HSummary& other) {
  trials += other.trials;
  for (std::size_t i = 0; i < status_counts.size(); ++i) status_counts[i] += other.status_counts[i];
  cycles.merge(other.cycles);
  iterations.merge(other.iterations);
  max_chunk.merge(other.max_chunk);
  chunk_cycles.merge(other.chunk_cycles);
  chunk_trials += other.chunk_trials;
  chunk_cyclic += other.chunk_cyclic;
  max_chunk_violations += other.max_chunk_violations;
  early_stops += other.early_stops;
  improper_successes += other.improper_successes;
}

std::vector<HSummary> run_trials(const SweepConfig& config,
                                 const std::function<void(const TrialOutcome&)>& on_record) {
  if (config.trials == 0) throw std::invalid_argument("trials must be at least 1");
  double work = 0.0;
  for (auto h : config.h_values) {
    if (h == 0) throw std::invalid_argument("lift size must be positive");
    work += static_cast<double>(h) * static_cast<double>(config.trials);
  }
  if (work > config.max_work)
    throw ResourceCapExceeded("sweep needs " + std::to_string(work) + " vertex-trials, cap is " +
                              std::to_string(config.max_work));

  const BaseGraph base = BaseGraph::join(config.k, config.s);
  RunOptions options = config.run_options;
  options.keep_colouring = false;
  options.keep_lift = false;

  std::vector<HSummary> summaries;
  // Bounded batches keep memory flat while preserving emission order.
  const std::size_t batch = std::max<std::size_t>(64, 16 * config.workers);
  for (auto h : config.h_values) {
    HSummary summary;
    summary.h = h;
    std::vector<std::optional<TrialOutcome>> slots;
    for (std::size_t first = 0; first < config.trials; first += batch) {
      const std::size_t count = std::min(batch, config.trials - first);
      slots.assign(count, std::nullopt);
      parallel_for(count, config.workers, [&](std::size_t i) {
        const std::uint64_t seed = trial_seed(config.master_seed, h, first + i);
        slots[i] = run(base, h, seed, options);
      });
      for (auto& slot : slots) {
        summary.add(*slot);
        if (on_record) on_record(*slot);
      }
    }
    summaries.push_back(std::move(summary));
  }
  return summaries;
}

}  // namespace liftlab
