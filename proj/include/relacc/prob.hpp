#ifndef RELACC_PROB_HPP
#define RELACC_PROB_HPP

#include <vector>

#include "relacc/types.hpp"

namespace relacc {

enum class Which { k1, k2 };

enum class Regime { LowLine, HighLine, Degenerate };

// The mesh sizes where the probability curve changes branch, plus the
// regime selecting which branch family applies.
struct Breakpoints {
  double hslash1 = 0.0;  // cap crossing of the k1 bound
  double hslash2 = 0.0;  // cap crossing of the k2 bound
  double h_star = 0.0;   // intersection of the two polynomial bounds
  Regime regime = Regime::LowLine;
};

// min(lambda, C_k * h^{k+1-m}) for the selected degree.
double beta_value(const ModelParams& params, Which which, double h);

// Both envelopes at once.
BetaPair beta_pair(const ModelParams& params, double h);

Breakpoints breakpoints(const ModelParams& params);

// Density of Z = X1 - X2 with X1 ~ U([0,beta1]), X2 ~ U([0,beta2]).
// Support is [-beta2, beta1].
double density_z(const BetaPair& beta, double z);

// Closed-form CDF of Z, obtained by branch-wise integration of the density.
double cdf_z(const BetaPair& beta, double z);

// P{X1 <= X2} = cdf_z(0): 1 - beta1/(2*beta2) if beta1 <= beta2,
// else beta2/(2*beta1).
double head_probability(const BetaPair& beta);

// The piecewise probability curve P_{k1,k2}(h); equals
// head_probability(beta_pair(params, h)) for every h > 0, and extends
// continuously with value 0 at h = 0.
double probability_curve(const ModelParams& params, double h);

struct CurvePoint {
  double h;
  double prob;
};

enum class Spacing { Linear, Log };

// n sampling points over [h_min, h_max] (endpoints included) plus the
// regime breakpoints falling strictly inside the range, so exported
// curves show their kinks exactly.
std::vector<CurvePoint> sample_curve(const ModelParams& params, double h_min,
                                     double h_max, int n, Spacing spacing);

}  // namespace relacc

#endif
