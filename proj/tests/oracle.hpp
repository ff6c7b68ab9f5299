#ifndef RELACC_TESTS_ORACLE_HPP
#define RELACC_TESTS_ORACLE_HPP

// Independent reference computations used to freeze expected values.
// Nothing here goes through the closed forms under test.

#include <algorithm>
#include <cmath>
#include <functional>

namespace oracle {

// Density of X1 - X2 for X1 ~ U([0,b1]), X2 ~ U([0,b2]) by direct
// convolution: the integrand is the product of two box indicators, so
// the integral is the overlap length of [0,b2] and [-z, b1-z].
inline double convolved_density(double b1, double b2, double z) {
  const double lo = std::max(0.0, -z);
  const double hi = std::min(b2, b1 - z);
  return std::max(0.0, hi - lo) / (b1 * b2);
}

inline double adaptive_simpson_impl(const std::function<double(double)>& f,
                                    double a, double b, double fa, double fm,
                                    double fb, double whole, double tol,
                                    int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson_impl(f, a, m, fa, flm, fm, left, 0.5 * tol,
                               depth - 1) +
         adaptive_simpson_impl(f, m, b, fm, frm, fb, right, 0.5 * tol,
                               depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f,
                               double a, double b, double tol,
                               int max_depth = 50) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_impl(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// CDF reference: quadrature over the convolution density.
inline double convolved_cdf(double b1, double b2, double z, double tol = 1e-12) {
  if (z <= -b2) return 0.0;
  const double hi = std::min(z, b1);
  const double scale = std::max(1.0, b1 + b2);
  return adaptive_simpson(
      [b1, b2](double t) { return convolved_density(b1, b2, t); }, -b2, hi,
      tol * scale);
}

}  // namespace oracle

#endif
