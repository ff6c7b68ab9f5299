#include "relacc/ode.hpp"

#include <cmath>

namespace relacc {

namespace {

std::vector<double> axpy(const std::vector<double>& y, double a,
                         const std::vector<double>& d) {
  std::vector<double> r(y.size());
  for (size_t i = 0; i < y.size(); ++i) r[i] = y[i] + a * d[i];
  return r;
}

// h * Phi(t, y) for the selected scheme.
std::vector<double> increment(const OdeRhs& rhs, double t,
                              const std::vector<double>& y, double h,
                              OdeScheme scheme) {
  const auto k1 = rhs(t, y);
  switch (scheme) {
    case OdeScheme::Euler: {
      std::vector<double> r(k1.size());
      for (size_t i = 0; i < r.size(); ++i) r[i] = h * k1[i];
      return r;
    }
    case OdeScheme::Heun: {
      const auto k2 = rhs(t + h, axpy(y, h, k1));
      std::vector<double> r(k1.size());
      for (size_t i = 0; i < r.size(); ++i) r[i] = 0.5 * h * (k1[i] + k2[i]);
      return r;
    }
    case OdeScheme::Rk4: {
      const auto k2 = rhs(t + 0.5 * h, axpy(y, 0.5 * h, k1));
      const auto k3 = rhs(t + 0.5 * h, axpy(y, 0.5 * h, k2));
      const auto k4 = rhs(t + h, axpy(y, h, k3));
      std::vector<double> r(k1.size());
      for (size_t i = 0; i < r.size(); ++i)
        r[i] = h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      return r;
    }
  }
  throw ParameterError("unknown ODE scheme");
}

void check_finite(const std::vector<double>& y, size_t step) {
  for (double v : y)
    if (!std::isfinite(v))
      throw DataError("non-finite state at step " + std::to_string(step));
}

}  // namespace

std::vector<OdeStep> integrate_ode(const OdeRhs& rhs,
                                   const std::vector<double>& y0, double t0,
                                   double T, double h, OdeScheme scheme) {
  if (!(h > 0.0) || !(T > 0.0)) throw ParameterError("require h > 0 and T > 0");
  std::vector<OdeStep> traj;
  traj.push_back({t0, y0});
  double t = t0;
  const double t_end = t0 + T;
  size_t step = 0;
  while (t < t_end - 1e-12 * T) {
    const double hs = std::min(h, t_end - t);
    const auto& y = traj.back().y;
    auto y_next = axpy(y, 1.0, increment(rhs, t, y, hs, scheme));
    check_finite(y_next, step);
    t = (hs < h) ? t_end : t0 + static_cast<double>(step + 1) * h;
    if (t > t_end) t = t_end;
    traj.push_back({t, std::move(y_next)});
    ++step;
  }
  traj.back().t = t_end;
  return traj;
}

OdeProblem OdeProblem::exp_growth() {
  OdeProblem p;
  p.name = "exp-growth";
  p.rhs = [](double, const std::vector<double>& y) {
    return std::vector<double>{y[0]};
  };
  p.exact = [](double t) { return std::vector<double>{std::exp(t)}; };
  p.y0 = {1.0};
  return p;
}

double ode_defect_sum(const OdeProblem& problem, double h, OdeScheme scheme) {
  if (!(h > 0.0)) throw ParameterError("h must be > 0");
  double sum = 0.0;
  double t = problem.t0;
  const double t_end = problem.t0 + problem.T;
  while (t < t_end - 1e-12 * problem.T) {
    const double hs = std::min(h, t_end - t);
    const auto yn = problem.exact(t);
    const auto yn1 = problem.exact(t + hs);
    const auto inc = increment(problem.rhs, t, yn, hs, scheme);
    double norm2 = 0.0;
    for (size_t i = 0; i < yn.size(); ++i) {
      const double d = yn1[i] - yn[i] - inc[i];
      norm2 += d * d;
    }
    sum += std::sqrt(norm2);
    t += hs;
  }
  return sum;
}

double ode_endpoint_error(const OdeProblem& problem, double h,
                          OdeScheme scheme) {
  const auto traj =
      integrate_ode(problem.rhs, problem.y0, problem.t0, problem.T, h, scheme);
  const auto exact = problem.exact(problem.t0 + problem.T);
  double norm2 = 0.0;
  for (size_t i = 0; i < exact.size(); ++i) {
    const double d = traj.back().y[i] - exact[i];
    norm2 += d * d;
  }
  return std::sqrt(norm2);
}

}  // namespace relacc
