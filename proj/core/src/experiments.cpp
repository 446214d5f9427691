#include "liftlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "liftlab/parallel.hpp"
#include "liftlab/permutation.hpp"

namespace liftlab {

namespace {

constexpr std::size_t kBlock = 1024;

// Stream tags keep the experiments' random streams disjoint.
enum : std::uint64_t {
  kCycleStream = 0x01,
  kContinuousStream = 0x02,
  kDiscreteStream = 0x03,
  kSubsetStream = 0x04,
  kCouplingStream = 0x05,
  kDirectStream = 0x06,
  kLazyStream = 0x07,
  kUpfrontStream = 0x08,
  kDrawStream = 0x09,
};

std::size_t block_count(std::size_t samples) { return (samples + kBlock - 1) / kBlock; }

std::size_t block_size(std::size_t samples, std::size_t b) {
  return std::min(kBlock, samples - b * kBlock);
}

// A zero standard error leaves any nonzero difference infinitely significant.
double z_score(double diff, double se) {
  if (se > 0) return diff / se;
  return diff == 0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
}

}  // namespace

CycleCountResult cycle_count_experiment(std::size_t h, std::size_t trials, int k, std::uint64_t seed,
                                        std::size_t workers) {
  std::vector<double> counts(trials);
  parallel_for(trials, workers, [&](std::size_t i) {
    Rng rng(derive_seed(seed, kCycleStream ^ (h << 8), i));
    std::vector<Permutation> perms;
    perms.reserve(static_cast<std::size_t>(k));
    for (int e = 0; e < k; ++e) perms.push_back(Permutation::random(h, rng));
    counts[i] = static_cast<double>(compose_cycle_structure(perms).size());
  });
  RunningStats st;
  for (double c : counts) st.add(c);
  CycleCountResult r;
  r.h = h;
  r.trials = trials;
  r.mean = st.mean();
  r.standard_error = st.standard_error();
  r.expected = harmonic(h);
  r.exact_variance = harmonic(h) - harmonic2(h);
  r.z = z_score(r.mean - r.expected, r.standard_error);
  return r;
}

ContinuousGapResult continuous_gap_experiment(std::size_t n, std::size_t samples, std::uint64_t seed,
                                              std::size_t workers) {
  // by_gap[g][i]: gap g of sample i.
  std::vector<std::vector<double>> by_gap(n + 1, std::vector<double>(samples));
  parallel_for(block_count(samples), workers, [&](std::size_t b) {
    Rng rng(derive_seed(seed, kContinuousStream, b));
    for (std::size_t t = 0; t < block_size(samples, b); ++t) {
      const auto g = sample_continuous_gaps(n, rng);
      for (std::size_t idx = 0; idx <= n; ++idx) by_gap[idx][b * kBlock + t] = g.gaps[idx];
    }
  });

  ContinuousGapResult r;
  r.n = n;
  r.samples = samples;
  const auto cdf = [n](double a) { return 1.0 - gap_survival(n, std::clamp(a, 0.0, 1.0)); };
  r.per_gap.resize(n + 1);
  parallel_for(n + 1, workers, [&](std::size_t g) { r.per_gap[g] = ks_test(by_gap[g], cdf); });
  for (const auto& t : r.per_gap) r.min_p = std::min(r.min_p, t.p_value);
  r.exchangeability = ks_two_sample(by_gap[0], by_gap[n / 2]);

  const double nd = static_cast<double>(n);
  for (double scaled : {0.25, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0}) {
    const double a = std::min(1.0, scaled / nd);
    std::size_t above = 0;
    for (const auto& col : by_gap)
      above += static_cast<std::size_t>(std::count_if(col.begin(), col.end(), [a](double x) { return x > a; }));
    r.curve.push_back({a, static_cast<double>(above) / static_cast<double>((n + 1) * samples), gap_survival(n, a)});
  }
  return r;
}

std::vector<BoundPoint> discrete_gap_frequencies(std::size_t n, const std::vector<std::int64_t>& Ns,
                                                 const std::vector<double>& as, std::size_t samples,
                                                 std::uint64_t seed, std::size_t workers) {
  std::vector<BoundPoint> out;
  for (std::size_t ni = 0; ni < Ns.size(); ++ni) {
    const std::int64_t N = Ns[ni];
    // hits[b][ai]: exceedances in block b.
    std::vector<std::vector<std::size_t>> hits(block_count(samples), std::vector<std::size_t>(as.size(), 0));
    parallel_for(block_count(samples), workers, [&](std::size_t b) {
      Rng rng(derive_seed(seed, kDiscreteStream ^ (static_cast<std::uint64_t>(N) << 8), b));
      for (std::size_t t = 0; t < block_size(samples, b); ++t) {
        const auto g = sample_discrete_gaps(n, N, rng);
        for (std::size_t ai = 0; ai < as.size(); ++ai) {
          const double threshold = as[ai] * static_cast<double>(N) / static_cast<double>(n);
          for (auto gap : g.gaps) hits[b][ai] += static_cast<double>(gap) > threshold;
        }
      }
    });
    for (std::size_t ai = 0; ai < as.size(); ++ai) {
      std::size_t total = 0;
      for (const auto& h : hits) total += h[ai];
      out.push_back({as[ai], n, N, 1.0,
                     static_cast<double>(total) / static_cast<double>((n + 1) * samples)});
    }
  }
  return out;
}

std::vector<BoundPoint> subset_gap_frequencies(std::size_t n, const std::vector<std::int64_t>& Ns,
                                               const std::vector<double>& as, std::size_t samples,
                                               std::uint64_t seed, std::size_t workers) {
  std::vector<BoundPoint> out;
  for (const std::int64_t N : Ns) {
    std::vector<std::vector<std::size_t>> hits(block_count(samples), std::vector<std::size_t>(as.size(), 0));
    parallel_for(block_count(samples), workers, [&](std::size_t b) {
      Rng rng(derive_seed(seed, kSubsetStream ^ (static_cast<std::uint64_t>(N) << 8), b));
      for (std::size_t t = 0; t < block_size(samples, b); ++t) {
        const auto subset = sample_subset(n, N, rng);
        const auto longest = static_cast<double>(longest_gap_run(subset, N));
        for (std::size_t ai = 0; ai < as.size(); ++ai) {
          const double run = std::ceil(as[ai] * static_cast<double>(N) / static_cast<double>(n));
          hits[b][ai] += run <= static_cast<double>(N) && longest >= run;
        }
      }
    });
    for (std::size_t ai = 0; ai < as.size(); ++ai) {
      std::size_t total = 0;
      for (const auto& h : hits) total += h[ai];
      out.push_back({as[ai], n, N, static_cast<double>(n + 1),
                     static_cast<double>(total) / static_cast<double>(samples)});
    }
  }
  return out;
}

BoundCheck check_bound(std::vector<BoundPoint> calibration, std::vector<BoundPoint> held_out) {
  BoundCheck r;
  r.c = fit_bound_constant(calibration);
  for (const auto& p : held_out) r.violations += p.frequency > bound_value(p, r.c);
  r.calibration = std::move(calibration);
  r.held_out = std::move(held_out);
  return r;
}

CouplingResult coupling_experiment(std::size_t n, std::int64_t N, std::size_t samples, std::uint64_t seed) {
  CouplingResult r;
  r.samples = samples;
  Rng coupled(derive_seed(seed, kCouplingStream, 0));
  Rng direct(derive_seed(seed, kDirectStream, 0));
  std::vector<double> rounded_mid, direct_mid;
  rounded_mid.reserve(samples);
  direct_mid.reserve(samples);
  const auto Nd = static_cast<double>(N);
  for (std::size_t t = 0; t < samples; ++t) {
    const auto [cont, disc] = sample_coupled_gaps(n, N, coupled);
    for (std::size_t g = 0; g <= n; ++g)
      r.pathwise_violations += static_cast<double>(disc.gaps[g]) > Nd * cont.gaps[g] + 2.0;
    rounded_mid.push_back(static_cast<double>(disc.gaps[n / 2]));
    direct_mid.push_back(static_cast<double>(sample_discrete_gaps(n, N, direct).gaps[n / 2]));
  }
  r.marginal = ks_two_sample(rounded_mid, direct_mid);
  return r;
}

UniformityResult draw_uniformity_experiment(int k, int s, std::size_t h, std::size_t trials,
                                            std::uint64_t seed, std::size_t workers) {
  const BaseGraph base = BaseGraph::join(k, s);
  RunOptions options;
  options.record_draws = true;
  std::vector<std::vector<double>> pit(trials);
  parallel_for(trials, workers, [&](std::size_t i) {
    const std::uint64_t trial = derive_seed(seed, kDrawStream, i);
    TrialOutcome o = run(base, h, trial, options);
    Rng jitter(splitmix64(trial));
    for (const auto& d : o.draws)
      pit[i].push_back((static_cast<double>(d.rank) + uniform_unit(jitter)) / static_cast<double>(d.available));
  });
  std::vector<double> values;
  for (auto& v : pit) values.insert(values.end(), v.begin(), v.end());

  UniformityResult r;
  r.draws = values.size();
  r.ks = ks_test(values, [](double x) { return std::clamp(x, 0.0, 1.0); });
  std::vector<std::size_t> bins(10, 0);
  for (double v : values) ++bins[std::min<std::size_t>(9, static_cast<std::size_t>(v * 10.0))];
  r.chi_square = chi_square_uniform(bins);
  return r;
}

ExchangeabilityResult exchangeability_experiment(int k, int s, std::size_t h, std::size_t trials,
                                                 std::uint64_t seed, std::size_t workers) {
  SweepConfig config;
  config.k = k;
  config.s = s;
  config.h_values = {h};
  config.trials = trials;
  config.workers = workers;

  ExchangeabilityResult r;
  config.master_seed = derive_seed(seed, kLazyStream, 0);
  config.run_options.schedule = ExposureSchedule::Lazy;
  r.lazy = run_trials(config).front();
  config.master_seed = derive_seed(seed, kUpfrontStream, 0);
  config.run_options.schedule = ExposureSchedule::Upfront;
  r.upfront = run_trials(config).front();

  const auto a = r.lazy.rate(TrialStatus::Success);
  const auto b = r.upfront.rate(TrialStatus::Success);
  const double pooled = (static_cast<double>(a.successes + b.successes)) / static_cast<double>(a.trials + b.trials);
  const double se = std::sqrt(pooled * (1 - pooled) * (1.0 / static_cast<double>(a.trials) + 1.0 / static_cast<double>(b.trials)));
  r.success_z = z_score(a.estimate - b.estimate, se);
  const double cse = std::hypot(r.lazy.cycles.standard_error(), r.upfront.cycles.standard_error());
  r.cycles_z = z_score(r.lazy.cycles.mean() - r.upfront.cycles.mean(), cse);
  return r;
}

bool nonincreasing_up_to_overlap(const std::vector<EstimateCI>& rates) {
  for (std::size_t i = 0; i < rates.size(); ++i)
    for (std::size_t j = i + 1; j < rates.size(); ++j)
      if (rates[j].estimate > rates[i].estimate && !rates[j].overlaps(rates[i])) return false;
  return true;
}

}  // namespace liftlab
