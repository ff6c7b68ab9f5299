#ifndef RELACC_EMPIRICS_HPP
#define RELACC_EMPIRICS_HPP

#include <vector>

#include "relacc/calibrate.hpp"
#include "relacc/fem.hpp"
#include "relacc/ode.hpp"
#include "relacc/quadrature.hpp"

namespace relacc {

// W^{m,p} error of the P_k Galerkin solution on a uniform mesh of size
// h, one sample per entry of h_list.
ErrorSeries fem_error_series(const ManufacturedProblem& problem, int degree,
                             int m, double p, const std::vector<double>& h_list);

// |composite rule - exact| over [a, b]; h = panel width.
ErrorSeries quadrature_error_series(const RealFn& f, double exact_integral,
                                    double a, double b, QuadRule rule,
                                    const std::vector<int>& panel_counts);

enum class OdeErrorKind { DefectSum, Endpoint };

ErrorSeries ode_error_series(const OdeProblem& problem, OdeScheme scheme,
                             const std::vector<double>& h_list,
                             OdeErrorKind kind = OdeErrorKind::DefectSum);

const char* quad_rule_name(QuadRule rule);
const char* ode_scheme_name(OdeScheme scheme);

}  // namespace relacc

#endif
