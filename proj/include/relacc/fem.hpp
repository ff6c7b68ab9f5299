#ifndef RELACC_FEM_HPP
#define RELACC_FEM_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "relacc/quadrature.hpp"
#include "relacc/types.hpp"

namespace relacc {

struct Mesh1D {
  std::vector<double> nodes;  // strictly increasing, covers [a, b]

  double a() const { return nodes.front(); }
  double b() const { return nodes.back(); }
  int n_elements() const { return static_cast<int>(nodes.size()) - 1; }
  double h() const;  // largest element length

  static Mesh1D uniform(double a, double b, int n_elements);
  // Interior nodes perturbed by up to jitter_frac * h, keyed by seed.
  static Mesh1D jittered(double a, double b, int n_elements,
                         double jitter_frac, std::uint64_t seed);
  void validate() const;
};

// A 1D Dirichlet problem with a known exact solution; the forcing is
// derived so -u'' = f holds and the discretization error is exactly
// measurable.
struct ManufacturedProblem {
  std::string name;
  RealFn exact_u;
  RealFn exact_du;
  RealFn forcing_f;
  double a = 0.0;
  double b = 1.0;

  // u = sin(pi x), f = pi^2 sin(pi x) on [0, 1].
  static ManufacturedProblem sin_pi();
  // u = x^d on [0, 1]; P_k reproduces it exactly for d <= k.
  static ManufacturedProblem monomial(int d);
};

// Continuous piecewise-P_k Lagrange function: k+1 equispaced nodal
// values per element, endpoints shared between neighbors.
struct FeSolution {
  Mesh1D mesh;
  int degree = 1;
  std::vector<double> coefficients;

  double value(double x) const;
  double derivative(double x) const;
};

FeSolution solve_poisson_1d(const ManufacturedProblem& problem,
                            const Mesh1D& mesh, int degree);

// W^{m,p} norm of u - u_h by per-element Gauss quadrature. m in {0, 1};
// n_gauss = 0 picks degree+3 points (enough beyond 2k+2 exactness).
double error_norm(const FeSolution& solution,
                  const ManufacturedProblem& problem, int m, double p,
                  int n_gauss = 0);

}  // namespace relacc

#endif
