#ifndef RELACC_MC_HPP
#define RELACC_MC_HPP

#include <cstdint>
#include <vector>

#include "relacc/types.hpp"

namespace relacc {

// Counter-based sampling: every deviate is a pure function of
// (seed, counter), so results are bit-identical for any n_streams.
struct McConfig {
  std::uint64_t n_samples = 1000000;
  std::uint64_t seed = 0;
  int n_streams = 1;
};

struct McEstimate {
  double p_hat = 0.0;
  double std_err = 0.0;
  std::uint64_t n = 0;
};

// Stateless uniform deviate in [0,1) keyed by (seed, counter).
double counter_uniform(std::uint64_t seed, std::uint64_t counter);

// Brute-force estimate of P{X1 <= X2} with X1 ~ U([0,beta1]),
// X2 ~ U([0,beta2]).
McEstimate mc_head_probability(const BetaPair& beta, const McConfig& cfg);

struct HistogramBin {
  double center;
  double density;  // normalized so the histogram integrates to 1
};

// Equal-width histogram of Z = X1 - X2 over its support [-beta2, beta1].
std::vector<HistogramBin> mc_density_histogram(const BetaPair& beta,
                                               const McConfig& cfg,
                                               int n_bins);

}  // namespace relacc

#endif
