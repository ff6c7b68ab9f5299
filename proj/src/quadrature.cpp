#include "relacc/quadrature.hpp"

#include <cmath>

namespace relacc {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw ParameterError("gauss order must be >= 1");
  GaussRule rule;
  rule.nodes.resize(static_cast<size_t>(n));
  rule.weights.resize(static_cast<size_t>(n));
  // Newton iteration on Legendre polynomials from the Chebyshev initial
  // guess; symmetric roots are filled in pairs.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<size_t>(i)] = -x;
    rule.nodes[static_cast<size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<size_t>(i)] = w;
    rule.weights[static_cast<size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<size_t>(n / 2)] = 0.0;
  return rule;
}

double gauss_integrate(const RealFn& f, double a, double b, int n) {
  const GaussRule rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    sum += rule.weights[static_cast<size_t>(i)] *
           f(mid + half * rule.nodes[static_cast<size_t>(i)]);
  return half * sum;
}

double composite_quadrature(const RealFn& f, double a, double b, int n_panels,
                            QuadRule rule) {
  if (n_panels < 1) throw ParameterError("n_panels must be >= 1");
  const double h = (b - a) / n_panels;
  double sum = 0.0;
  switch (rule) {
    case QuadRule::Midpoint:
      for (int i = 0; i < n_panels; ++i) sum += f(a + (i + 0.5) * h);
      return h * sum;
    case QuadRule::Trapezoid:
      sum = 0.5 * (f(a) + f(b));
      for (int i = 1; i < n_panels; ++i) sum += f(a + i * h);
      return h * sum;
    case QuadRule::Simpson:
      for (int i = 0; i < n_panels; ++i) {
        const double x0 = a + i * h;
        sum += f(x0) + 4.0 * f(x0 + 0.5 * h) + f(x0 + h);
      }
      return h / 6.0 * sum;
  }
  throw ParameterError("unknown quadrature rule");
}

}  // namespace relacc
