#include "relacc/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace relacc {

namespace {

void check_series(const ErrorSeries& series) {
  if (series.samples.size() < 2)
    throw DataError("need at least two samples: " + series.method_label);
  for (const auto& s : series.samples) {
    if (!(s.h > 0.0) || !(s.err > 0.0))
      throw DataError("h and err must be > 0: " + series.method_label);
  }
  auto sorted = series.samples;
  std::sort(sorted.begin(), sorted.end(),
            [](const ErrorSample& a, const ErrorSample& b) { return a.h < b.h; });
  for (size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].h == sorted[i - 1].h)
      throw DataError("duplicate h value in series: " + series.method_label);
  }
}

PowerLawFit ols_loglog(const std::vector<ErrorSample>& samples) {
  const double n = static_cast<double>(samples.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (const auto& s : samples) {
    const double x = std::log(s.h);
    const double y = std::log(s.err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double denom = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;

  double ss_res = 0, ss_tot = 0;
  const double ybar = sy / n;
  for (const auto& s : samples) {
    const double x = std::log(s.h);
    const double y = std::log(s.err);
    const double yhat = intercept + slope * x;
    ss_res += (y - yhat) * (y - yhat);
    ss_tot += (y - ybar) * (y - ybar);
  }
  const double r2 = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 1.0;
  return {std::exp(intercept), slope, r2};
}

// Local log-log slopes between consecutive samples (sorted by h); a
// sample is saturated if it participates in a flat slope.
std::vector<bool> saturated_mask(std::vector<ErrorSample>& sorted,
                                 double threshold) {
  std::sort(sorted.begin(), sorted.end(),
            [](const ErrorSample& a, const ErrorSample& b) { return a.h < b.h; });
  const size_t n = sorted.size();
  std::vector<bool> mask(n, false);
  for (size_t i = 0; i + 1 < n; ++i) {
    const double slope = (std::log(sorted[i + 1].err) - std::log(sorted[i].err)) /
                         (std::log(sorted[i + 1].h) - std::log(sorted[i].h));
    if (std::abs(slope) < threshold) mask[i] = mask[i + 1] = true;
  }
  return mask;
}

}  // namespace

PowerLawFit fit_power_law(const ErrorSeries& series) {
  check_series(series);
  return ols_loglog(series.samples);
}

CalibrationResult fit_model(const ErrorSeries& series1,
                            const ErrorSeries& series2,
                            const ElementPair& pair,
                            const LambdaPolicy& policy) {
  pair.validate();
  check_series(series1);
  check_series(series2);

  CalibrationResult result;
  result.params.pair = pair;

  double lambda = kLambdaInfinite;
  std::vector<ErrorSample> fit_samples1 = series1.samples;
  std::vector<ErrorSample> fit_samples2 = series2.samples;

  if (policy.kind == LambdaPolicy::Kind::Given) {
    if (!(policy.value > 0.0)) throw ParameterError("given lambda must be > 0");
    lambda = policy.value;
  } else if (policy.kind == LambdaPolicy::Kind::PlateauDetect) {
    double sum = 0.0;
    size_t count = 0;
    for (auto* sel : {&fit_samples1, &fit_samples2}) {
      const auto mask = saturated_mask(*sel, 0.2);
      for (size_t i = 0; i < sel->size(); ++i) {
        if (mask[i]) {
          sum += (*sel)[i].err;
          ++count;
        }
      }
    }
    if (count > 0) {
      lambda = sum / static_cast<double>(count);
      // The cap is shared between the series: a lone capped sample in
      // one series escapes the slope test, so drop cap-level samples
      // from both fits once lambda is known.
      for (auto* sel : {&fit_samples1, &fit_samples2}) {
        std::vector<ErrorSample> kept;
        for (const auto& s : *sel)
          if (s.err < 0.95 * lambda) kept.push_back(s);
        if (kept.size() >= 2) *sel = kept;
      }
    } else {
      result.warnings.push_back(
          "plateau_detect found no saturated samples; lambda set to infinite");
    }
  }

  result.fit1 = ols_loglog(fit_samples1);
  result.fit2 = ols_loglog(fit_samples2);
  result.params.c1 = result.fit1.c;
  result.params.c2 = result.fit2.c;
  result.params.lambda = lambda;

  const auto check_exponent = [&](const PowerLawFit& fit, int expected,
                                  const std::string& label) {
    if (std::abs(fit.q - expected) > 0.5) {
      std::ostringstream os;
      os << "fitted exponent for " << label << " is " << fit.q
         << ", expected about " << expected;
      result.warnings.push_back(os.str());
    }
  };
  check_exponent(result.fit1, pair.exponent1(), series1.method_label);
  check_exponent(result.fit2, pair.exponent2(), series2.method_label);

  result.params.validate();
  return result;
}

}  // namespace relacc
