#ifndef RELACC_QUADRATURE_HPP
#define RELACC_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "relacc/types.hpp"

namespace relacc {

using RealFn = std::function<double(double)>;

// Gauss-Legendre nodes and weights on [-1, 1], exact for polynomials of
// degree 2n-1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

// Integral of f over [a, b] with an n-point Gauss rule.
double gauss_integrate(const RealFn& f, double a, double b, int n);

enum class QuadRule { Midpoint, Trapezoid, Simpson };

// Standard composite rule over n_panels equal panels.
double composite_quadrature(const RealFn& f, double a, double b, int n_panels,
                            QuadRule rule);

}  // namespace relacc

#endif
