#ifndef RELACC_ODE_HPP
#define RELACC_ODE_HPP

#include <functional>
#include <string>
#include <vector>

#include "relacc/types.hpp"

namespace relacc {

using OdeRhs =
    std::function<std::vector<double>(double, const std::vector<double>&)>;

enum class OdeScheme { Euler, Heun, Rk4 };

struct OdeStep {
  double t;
  std::vector<double> y;
};

// Fixed-step one-step integration from t0 to t0+T; a non-dividing final
// step is shortened to land exactly on t0+T.
std::vector<OdeStep> integrate_ode(const OdeRhs& rhs,
                                   const std::vector<double>& y0, double t0,
                                   double T, double h, OdeScheme scheme);

// An initial value problem with known exact solution.
struct OdeProblem {
  std::string name;
  OdeRhs rhs;
  std::function<std::vector<double>(double)> exact;
  std::vector<double> y0;
  double t0 = 0.0;
  double T = 1.0;

  // y' = y, y(0) = 1.
  static OdeProblem exp_growth();
};

// Sum over steps of |y(t_{n+1}) - y(t_n) - h*Phi(t_n, y(t_n))|, the
// local defects of the scheme along the exact trajectory.
double ode_defect_sum(const OdeProblem& problem, double h, OdeScheme scheme);

// |y_N - y(t0+T)| in the Euclidean norm.
double ode_endpoint_error(const OdeProblem& problem, double h,
                          OdeScheme scheme);

}  // namespace relacc

#endif
