#include "relacc/empirics.hpp"

#include <cmath>

namespace relacc {

ErrorSeries fem_error_series(const ManufacturedProblem& problem, int degree,
                             int m, double p,
                             const std::vector<double>& h_list) {
  ErrorSeries series;
  series.method_label = "fem-P" + std::to_string(degree) + "-W" +
                        std::to_string(m) + "p";
  for (double h : h_list) {
    if (!(h > 0.0)) throw ParameterError("h must be > 0");
    const int ne =
        std::max(1, static_cast<int>(std::lround((problem.b - problem.a) / h)));
    const Mesh1D mesh = Mesh1D::uniform(problem.a, problem.b, ne);
    const FeSolution sol = solve_poisson_1d(problem, mesh, degree);
    series.samples.push_back({mesh.h(), error_norm(sol, problem, m, p)});
  }
  return series;
}

ErrorSeries quadrature_error_series(const RealFn& f, double exact_integral,
                                    double a, double b, QuadRule rule,
                                    const std::vector<int>& panel_counts) {
  ErrorSeries series;
  series.method_label = std::string("quad-") + quad_rule_name(rule);
  for (int n : panel_counts) {
    const double approx = composite_quadrature(f, a, b, n, rule);
    series.samples.push_back({(b - a) / n, std::abs(approx - exact_integral)});
  }
  return series;
}

ErrorSeries ode_error_series(const OdeProblem& problem, OdeScheme scheme,
                             const std::vector<double>& h_list,
                             OdeErrorKind kind) {
  ErrorSeries series;
  series.method_label = std::string("ode-") + ode_scheme_name(scheme) +
                        (kind == OdeErrorKind::DefectSum ? "-defect" : "-endpoint");
  for (double h : h_list) {
    const double err = (kind == OdeErrorKind::DefectSum)
                           ? ode_defect_sum(problem, h, scheme)
                           : ode_endpoint_error(problem, h, scheme);
    series.samples.push_back({h, err});
  }
  return series;
}

const char* quad_rule_name(QuadRule rule) {
  switch (rule) {
    case QuadRule::Midpoint: return "midpoint";
    case QuadRule::Trapezoid: return "trapezoid";
    case QuadRule::Simpson: return "simpson";
  }
  return "?";
}

const char* ode_scheme_name(OdeScheme scheme) {
  switch (scheme) {
    case OdeScheme::Euler: return "euler";
    case OdeScheme::Heun: return "heun";
    case OdeScheme::Rk4: return "rk4";
  }
  return "?";
}

}  // namespace relacc
