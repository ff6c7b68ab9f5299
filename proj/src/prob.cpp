#include "relacc/prob.hpp"

#include <algorithm>
#include <cmath>

namespace relacc {

namespace {

// Integer powers by repeated multiplication; the curve exponents are
// small integers and this keeps evaluations deterministic near the
// breakpoints.
double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

constexpr double kRegimeTol = 1e-12;

}  // namespace

double beta_value(const ModelParams& params, Which which, double h) {
  params.validate();
  if (!(h > 0.0)) throw ParameterError("h must be > 0");
  const double c = (which == Which::k1) ? params.c1 : params.c2;
  const int e = (which == Which::k1) ? params.pair.exponent1()
                                     : params.pair.exponent2();
  const double poly = c * ipow(h, e);
  if (params.legacy()) return poly;
  return std::min(params.lambda, poly);
}

BetaPair beta_pair(const ModelParams& params, double h) {
  return BetaPair{h, beta_value(params, Which::k1, h),
                  beta_value(params, Which::k2, h)};
}

Breakpoints breakpoints(const ModelParams& params) {
  params.validate();
  if (params.legacy())
    throw ParameterError(
        "breakpoints are undefined in legacy mode (no cap crossings)");
  const int e1 = params.pair.exponent1();
  const int e2 = params.pair.exponent2();
  const int dk = params.pair.k2 - params.pair.k1;

  Breakpoints bp;
  bp.h_star = std::pow(params.c1 / params.c2, 1.0 / dk);
  bp.hslash1 = std::pow(params.lambda / params.c1, 1.0 / e1);
  bp.hslash2 = std::pow(params.lambda / params.c2, 1.0 / e2);

  // Which side of the bound intersection the cap sits on.
  const double cross = params.c1 * ipow(bp.h_star, e1);
  const double gap = params.lambda - cross;
  if (std::abs(gap) <= kRegimeTol * std::max(params.lambda, cross)) {
    bp.regime = Regime::Degenerate;
    bp.hslash1 = bp.hslash2 = bp.h_star;
  } else if (gap < 0.0) {
    bp.regime = Regime::LowLine;
  } else {
    bp.regime = Regime::HighLine;
  }
  return bp;
}

double density_z(const BetaPair& beta, double z) {
  const double b1 = beta.beta1;
  const double b2 = beta.beta2;
  if (!(b1 > 0.0) || !(b2 > 0.0))
    throw DegenerateDistributionError(
        "beta bounds must be > 0: the difference distribution has no density");
  if (z <= -b2 || z >= b1) return 0.0;
  if (b1 <= b2) {
    if (z <= b1 - b2) return (b2 + z) / (b1 * b2);
    if (z <= 0.0) return 1.0 / b2;
    return (b1 - z) / (b1 * b2);
  }
  if (z <= 0.0) return (b2 + z) / (b1 * b2);
  if (z <= b1 - b2) return 1.0 / b1;
  return (b1 - z) / (b1 * b2);
}

double cdf_z(const BetaPair& beta, double z) {
  const double b1 = beta.beta1;
  const double b2 = beta.beta2;
  if (!(b1 > 0.0) || !(b2 > 0.0))
    throw DegenerateDistributionError(
        "beta bounds must be > 0: the difference distribution has no density");
  if (z <= -b2) return 0.0;
  if (z >= b1) return 1.0;
  // Rising and falling edges integrate to quadratics, the flat middle
  // branch to a linear ramp.
  const double lo = std::min(0.0, b1 - b2);   // end of the rising edge
  const double hi = std::max(0.0, b1 - b2);   // start of the falling edge
  if (z <= lo) {
    const double t = z + b2;
    return t * t / (2.0 * b1 * b2);
  }
  if (z >= hi) {
    const double t = b1 - z;
    return 1.0 - t * t / (2.0 * b1 * b2);
  }
  const double f_lo = std::min(b1, b2) / (2.0 * std::max(b1, b2));
  return f_lo + (z - lo) / std::max(b1, b2);
}

double head_probability(const BetaPair& beta) {
  const double b1 = beta.beta1;
  const double b2 = beta.beta2;
  if (!(b1 > 0.0) || !(b2 > 0.0))
    throw DegenerateDistributionError(
        "beta bounds must be > 0: the difference distribution has no density");
  if (b1 <= b2) return 1.0 - 0.5 * b1 / b2;
  return 0.5 * b2 / b1;
}

double probability_curve(const ModelParams& params, double h) {
  params.validate();
  if (h < 0.0) throw ParameterError("h must be >= 0");
  if (h == 0.0) return 0.0;  // continuous extension of the small-h branch

  const int dk = params.pair.k2 - params.pair.k1;
  const int e1 = params.pair.exponent1();
  const int e2 = params.pair.exponent2();

  if (params.legacy()) {
    const double h_star = std::pow(params.c1 / params.c2, 1.0 / dk);
    if (h <= h_star) return 0.5 * ipow(h / h_star, dk);
    return 1.0 - 0.5 * ipow(h_star / h, dk);
  }

  const Breakpoints bp = breakpoints(params);
  if (bp.regime == Regime::HighLine) {
    if (h <= bp.h_star) return 0.5 * ipow(h / bp.h_star, dk);
    if (h <= bp.hslash2) return 1.0 - 0.5 * ipow(bp.h_star / h, dk);
    if (h <= bp.hslash1) return 1.0 - 0.5 * ipow(h / bp.hslash1, e1);
    return 0.5;
  }
  // LowLine; the Degenerate case has hslash1 == hslash2 and the middle
  // branch drops out.
  if (h <= bp.hslash1) return 0.5 * ipow(h / bp.h_star, dk);
  if (h <= bp.hslash2) return 0.5 * ipow(h / bp.hslash2, e2);
  return 0.5;
}

std::vector<CurvePoint> sample_curve(const ModelParams& params, double h_min,
                                     double h_max, int n, Spacing spacing) {
  params.validate();
  if (!(h_min > 0.0) || !(h_min < h_max))
    throw ParameterError("require 0 < h_min < h_max");
  if (n < 2) throw ParameterError("n must be >= 2");

  std::vector<double> hs;
  hs.reserve(static_cast<size_t>(n) + 3);
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    double h;
    if (spacing == Spacing::Log) {
      h = h_min * std::pow(h_max / h_min, t);
    } else {
      h = h_min + t * (h_max - h_min);
    }
    hs.push_back(h);
  }
  hs.front() = h_min;
  hs.back() = h_max;

  // Kink locations of the active branch family.
  std::vector<double> kinks;
  if (params.legacy()) {
    kinks.push_back(std::pow(params.c1 / params.c2,
                             1.0 / (params.pair.k2 - params.pair.k1)));
  } else {
    const Breakpoints bp = breakpoints(params);
    if (bp.regime == Regime::HighLine) {
      kinks = {bp.h_star, bp.hslash2, bp.hslash1};
    } else {
      kinks = {bp.hslash1, bp.hslash2};
    }
  }
  for (double k : kinks) {
    if (k > h_min && k < h_max) hs.push_back(k);
  }
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end(),
                       [](double a, double b) {
                         return std::abs(a - b) <=
                                1e-15 * std::max(std::abs(a), std::abs(b));
                       }),
           hs.end());

  std::vector<CurvePoint> out;
  out.reserve(hs.size());
  for (double h : hs) out.push_back({h, probability_curve(params, h)});
  return out;
}

}  // namespace relacc
