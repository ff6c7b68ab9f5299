#ifndef RELACC_TYPES_HPP
#define RELACC_TYPES_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace relacc {

// Invalid model parameters (non-positive constants, bad degrees, ...).
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A bound collapsed to zero: the error distribution is a point mass and
// has no density.
class DegenerateDistributionError : public ParameterError {
public:
  using ParameterError::ParameterError;
};

// Bad observation data (too few points, non-positive values, ...).
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Distinguished value for the cap-free (legacy) model.
inline constexpr double kLambdaInfinite =
    std::numeric_limits<double>::infinity();

// The two polynomial degrees being compared, plus the Sobolev order m of
// the error norm. p is metadata: it labels which norm the constants were
// calibrated against but enters no closed form.
struct ElementPair {
  int k1 = 1;
  int k2 = 2;
  int m = 1;
  double p = 2.0;

  int exponent1() const { return k1 + 1 - m; }
  int exponent2() const { return k2 + 1 - m; }

  void validate() const {
    if (k1 < 1) throw ParameterError("k1 must be >= 1");
    if (k1 >= k2) throw ParameterError("k1 must be < k2");
    if (m < 1) throw ParameterError("m must be >= 1");
    if (exponent1() < 1)
      throw ParameterError("convergence exponent k1+1-m must be >= 1");
    if (p < 1.0) throw ParameterError("p must be >= 1");
  }
};

// Everything a probability curve depends on: the degrees, the two error
// constants C_k, and the aggregate a priori cap lambda (infinity selects
// the cap-free legacy model).
struct ModelParams {
  ElementPair pair;
  double c1 = 1.0;
  double c2 = 1.0;
  double lambda = kLambdaInfinite;

  bool legacy() const { return std::isinf(lambda); }

  void validate() const {
    pair.validate();
    if (!(c1 > 0.0)) throw ParameterError("c1 must be > 0");
    if (!(c2 > 0.0)) throw ParameterError("c2 must be > 0");
    if (!(lambda > 0.0)) throw ParameterError("lambda must be > 0");
  }
};

// The two error envelopes at one mesh size.
struct BetaPair {
  double h = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
};

}  // namespace relacc

#endif
