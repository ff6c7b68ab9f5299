#ifndef RELACC_CALIBRATE_HPP
#define RELACC_CALIBRATE_HPP

#include <string>
#include <vector>

#include "relacc/types.hpp"

namespace relacc {

struct ErrorSample {
  double h;
  double err;
};

struct ErrorSeries {
  std::string method_label;
  std::vector<ErrorSample> samples;
};

struct PowerLawFit {
  double c;   // err ~ c * h^q
  double q;
  double r2;  // coefficient of determination in log space
};

// Ordinary least squares on (ln h, ln err).
PowerLawFit fit_power_law(const ErrorSeries& series);

struct LambdaPolicy {
  enum class Kind { Given, Infinite, PlateauDetect };
  Kind kind = Kind::Infinite;
  double value = 0.0;

  static LambdaPolicy given(double lambda) {
    return {Kind::Given, lambda};
  }
  static LambdaPolicy infinite() { return {Kind::Infinite, 0.0}; }
  static LambdaPolicy plateau_detect() {
    return {Kind::PlateauDetect, 0.0};
  }
};

struct CalibrationResult {
  ModelParams params;
  PowerLawFit fit1;
  PowerLawFit fit2;
  std::vector<std::string> warnings;
};

// Fits C_k1 and C_k2 from two observed error series and resolves lambda
// per the policy. With plateau detection, samples whose local log-log
// slope is below 0.2 in magnitude are treated as cap-saturated: lambda
// is their mean error and they are excluded from the power-law fit.
CalibrationResult fit_model(const ErrorSeries& series1,
                            const ErrorSeries& series2,
                            const ElementPair& pair,
                            const LambdaPolicy& policy);

}  // namespace relacc

#endif
