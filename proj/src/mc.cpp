#include "relacc/mc.hpp"

#include <cmath>
#include <thread>

namespace relacc {

namespace {

// splitmix64 finalizer over a Weyl sequence offset by the seed.
std::uint64_t mix64(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void check(const BetaPair& beta, const McConfig& cfg) {
  if (!(beta.beta1 > 0.0) || !(beta.beta2 > 0.0))
    throw DegenerateDistributionError("beta bounds must be > 0");
  if (cfg.n_samples < 1) throw ParameterError("n_samples must be >= 1");
  if (cfg.n_streams < 1) throw ParameterError("n_streams must be >= 1");
}

// Runs fn(i) over [0, n) split across cfg.n_streams workers. The work is
// index-keyed, so the split only affects scheduling, not results.
template <typename Fn>
void for_each_sample(const McConfig& cfg, Fn&& fn) {
  const std::uint64_t n = cfg.n_samples;
  const int streams = cfg.n_streams;
  if (streams == 1) {
    for (std::uint64_t i = 0; i < n; ++i) fn(static_cast<int>(0), i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(streams);
  for (int s = 0; s < streams; ++s) {
    const std::uint64_t lo = n * s / streams;
    const std::uint64_t hi = n * (s + 1) / streams;
    workers.emplace_back([s, lo, hi, &fn] {
      for (std::uint64_t i = lo; i < hi; ++i) fn(s, i);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace

double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(mix64(seed, counter) >> 11) * 0x1.0p-53;
}

McEstimate mc_head_probability(const BetaPair& beta, const McConfig& cfg) {
  check(beta, cfg);
  std::vector<std::uint64_t> hits(static_cast<size_t>(cfg.n_streams), 0);
  for_each_sample(cfg, [&](int stream, std::uint64_t i) {
    const double x1 = beta.beta1 * counter_uniform(cfg.seed, 2 * i);
    const double x2 = beta.beta2 * counter_uniform(cfg.seed, 2 * i + 1);
    if (x1 <= x2) ++hits[static_cast<size_t>(stream)];
  });
  std::uint64_t total = 0;
  for (std::uint64_t c : hits) total += c;

  McEstimate est;
  est.n = cfg.n_samples;
  est.p_hat = static_cast<double>(total) / static_cast<double>(cfg.n_samples);
  est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) /
                          static_cast<double>(cfg.n_samples));
  return est;
}

std::vector<HistogramBin> mc_density_histogram(const BetaPair& beta,
                                               const McConfig& cfg,
                                               int n_bins) {
  check(beta, cfg);
  if (n_bins < 1) throw ParameterError("n_bins must be >= 1");
  const double lo = -beta.beta2;
  const double hi = beta.beta1;
  const double width = (hi - lo) / n_bins;

  std::vector<std::vector<std::uint64_t>> counts(
      static_cast<size_t>(cfg.n_streams),
      std::vector<std::uint64_t>(static_cast<size_t>(n_bins), 0));
  for_each_sample(cfg, [&](int stream, std::uint64_t i) {
    const double x1 = beta.beta1 * counter_uniform(cfg.seed, 2 * i);
    const double x2 = beta.beta2 * counter_uniform(cfg.seed, 2 * i + 1);
    const double z = x1 - x2;
    int b = static_cast<int>((z - lo) / width);
    if (b < 0) b = 0;
    if (b >= n_bins) b = n_bins - 1;
    ++counts[static_cast<size_t>(stream)][static_cast<size_t>(b)];
  });

  std::vector<HistogramBin> bins(static_cast<size_t>(n_bins));
  const double norm =
      1.0 / (static_cast<double>(cfg.n_samples) * width);
  for (int b = 0; b < n_bins; ++b) {
    std::uint64_t c = 0;
    for (int s = 0; s < cfg.n_streams; ++s)
      c += counts[static_cast<size_t>(s)][static_cast<size_t>(b)];
    bins[static_cast<size_t>(b)] = {lo + (b + 0.5) * width,
                                    static_cast<double>(c) * norm};
  }
  return bins;
}

}  // namespace relacc
