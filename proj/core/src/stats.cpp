#include "liftlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include <boost/math/special_functions/gamma.hpp>

namespace liftlab {

ContinuousGaps sample_continuous_gaps(std::size_t n, Rng& rng) {
  std::vector<double> points(n);
  for (auto& x : points) x = uniform_unit(rng);
  std::sort(points.begin(), points.end());
  ContinuousGaps out{n, {}};
  out.gaps.reserve(n + 1);
  double prev = 0.0;
  for (double x : points) {
    out.gaps.push_back(x - prev);
    prev = x;
  }
  out.gaps.push_back(1.0 - prev);
  return out;
}

double gap_survival(std::size_t n, double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw std::domain_error("gap threshold must lie in [0, 1]");
  return std::pow(1.0 - a, static_cast<double>(n));
}

namespace {

DiscreteGaps gaps_of(std::vector<std::int64_t> values, std::size_t n, std::int64_t N) {
  std::sort(values.begin(), values.end());
  DiscreteGaps out{n, N, {}};
  out.gaps.reserve(n + 1);
  std::int64_t prev = 0;
  for (auto y : values) {
    out.gaps.push_back(y - prev);
    prev = y;
  }
  out.gaps.push_back(N - prev);
  return out;
}

}  // namespace

DiscreteGaps sample_discrete_gaps(std::size_t n, std::int64_t N, Rng& rng) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  std::vector<std::int64_t> draws(n);
  for (auto& y : draws) y = 1 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(N)));
  return gaps_of(std::move(draws), n, N);
}

std::pair<ContinuousGaps, DiscreteGaps> sample_coupled_gaps(std::size_t n, std::int64_t N, Rng& rng) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  std::vector<double> xs(n);
  for (auto& x : xs) x = uniform_unit_open_left(rng);
  std::sort(xs.begin(), xs.end());
  std::vector<std::int64_t> ys(n);
  const auto Nd = static_cast<double>(N);
  for (std::size_t i = 0; i < n; ++i)
    ys[i] = std::clamp(static_cast<std::int64_t>(std::ceil(Nd * xs[i])), std::int64_t{1}, N);

  ContinuousGaps cont{n, {}};
  double prev = 0.0;
  for (double x : xs) {
    cont.gaps.push_back(x - prev);
    prev = x;
  }
  cont.gaps.push_back(1.0 - prev);
  // xs is sorted and ceil is monotone, so ys is already in order.
  return {std::move(cont), gaps_of(std::move(ys), n, N)};
}

std::vector<std::int64_t> sample_subset(std::size_t n, std::int64_t N, Rng& rng) {
  if (static_cast<std::int64_t>(n) > N) throw std::invalid_argument("subset larger than ground set");
  std::unordered_set<std::int64_t> chosen;
  chosen.reserve(n * 2);
  for (std::int64_t j = N - static_cast<std::int64_t>(n) + 1; j <= N; ++j) {
    const auto t = 1 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(j)));
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::int64_t> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t longest_gap_run(std::span<const std::int64_t> sorted_subset, std::int64_t N) {
  std::int64_t best = 0;
  std::int64_t prev = 0;
  for (auto r : sorted_subset) {
    best = std::max(best, r - prev - 1);
    prev = r;
  }
  return std::max(best, N - prev);
}

bool subset_gap_event(std::size_t n, std::int64_t N, double a, Rng& rng) {
  if (n < 1 || static_cast<std::int64_t>(n) > N) throw std::invalid_argument("need 1 <= n <= N");
  if (!(a > 0.0)) throw std::invalid_argument("a must be positive");
  const double run = std::ceil(a * static_cast<double>(N) / static_cast<double>(n));
  if (run > static_cast<double>(N)) return false;
  const auto subset = sample_subset(n, N, rng);
  return static_cast<double>(longest_gap_run(subset, N)) >= run;
}

EstimateCI wilson_interval(std::size_t successes, std::size_t trials, double z) {
  EstimateCI ci;
  ci.successes = successes;
  ci.trials = trials;
  if (trials == 0) {
    ci.upper = 1.0;
    return ci;
  }
  const auto n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  ci.estimate = p;
  ci.lower = std::clamp(std::min(centre - half, p), 0.0, 1.0);
  ci.upper = std::clamp(std::max(centre + half, p), 0.0, 1.0);
  return ci;
}

double kolmogorov_tail(double lambda) {
  if (lambda < 1e-3) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 200; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += sign * term;
    if (term < 1e-16) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

namespace {

double stephens_lambda(double d, double effective_n) {
  const double root = std::sqrt(effective_n);
  return (root + 0.12 + 0.11 / root) * d;
}

}  // namespace

TestResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.size() < 30) throw std::invalid_argument("KS test needs at least 30 samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    const auto di = static_cast<double>(i);
    d = std::max({d, (di + 1) / n - f, f - di / n});
  }
  return {d, kolmogorov_tail(stephens_lambda(d, n))};
}

TestResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 30 || b.size() < 30) throw std::invalid_argument("KS test needs at least 30 samples");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const auto nx = static_cast<double>(x.size());
  const auto ny = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return {d, kolmogorov_tail(stephens_lambda(d, nx * ny / (nx + ny)))};
}

TestResult chi_square(std::span<const std::size_t> observed, std::span<const double> expected) {
  if (observed.size() != expected.size() || observed.size() < 2)
    throw std::invalid_argument("chi-square needs matching bins, at least two");
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (!(expected[i] > 0.0)) throw std::invalid_argument("expected counts must be positive");
    const double diff = static_cast<double>(observed[i]) - expected[i];
    stat += diff * diff / expected[i];
  }
  const double df = static_cast<double>(observed.size() - 1);
  return {stat, boost::math::gamma_q(df / 2.0, stat / 2.0)};
}

TestResult chi_square_uniform(std::span<const std::size_t> counts) {
  double total = 0.0;
  for (auto c : counts) total += static_cast<double>(c);
  std::vector<double> expected(counts.size(), total / static_cast<double>(counts.size()));
  return chi_square(counts, expected);
}

double harmonic(std::size_t h) {
  double sum = 0.0;
  for (std::size_t i = h; i >= 1; --i) sum += 1.0 / static_cast<double>(i);
  return sum;
}

double harmonic2(std::size_t h) {
  double sum = 0.0;
  for (std::size_t i = h; i >= 1; --i) sum += 1.0 / (static_cast<double>(i) * static_cast<double>(i));
  return sum;
}

namespace {

std::vector<double> average_ranks(std::vector<double> values) {
  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman(std::span<const std::pair<double, double>> pairs) {
  if (pairs.size() < 2) return 0.0;
  std::vector<double> xs, ys;
  xs.reserve(pairs.size());
  ys.reserve(pairs.size());
  for (auto [x, y] : pairs) {
    xs.push_back(x);
    ys.push_back(y);
  }
  const auto rx = average_ranks(std::move(xs));
  const auto ry = average_ranks(std::move(ys));
  RunningStats sx, sy;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sx.add(rx[i]);
    sy.add(ry[i]);
  }
  double cov = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) cov += (rx[i] - sx.mean()) * (ry[i] - sy.mean());
  cov /= static_cast<double>(rx.size() - 1);
  const double denom = std::sqrt(sx.variance() * sy.variance());
  return denom > 0.0 ? cov / denom : 0.0;
}

void RunningStats::add(double x) {
  ++n_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(n_);
  m2_ += delta * (x - mean_);
}

void RunningStats::merge(const RunningStats& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const auto na = static_cast<double>(n_);
  const auto nb = static_cast<double>(other.n_);
  const double delta = other.mean_ - mean_;
  const double total = na + nb;
  mean_ += delta * nb / total;
  m2_ += other.m2_ + delta * delta * na * nb / total;
  n_ += other.n_;
}

double RunningStats::standard_error() const {
  return n_ > 1 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
}

double bound_value(const BoundPoint& p, double c) {
  return p.multiplier * std::exp(-p.a + c * static_cast<double>(p.n) / static_cast<double>(p.N));
}

double fit_bound_constant(std::span<const BoundPoint> calibration) {
  double c = 0.0;
  for (const auto& p : calibration) {
    if (!(p.frequency > 0.0)) continue;
    const double needed =
        (std::log(p.frequency / p.multiplier) + p.a) * static_cast<double>(p.N) / static_cast<double>(p.n);
    c = std::max(c, needed);
  }
  return c;
}

}  // namespace liftlab
