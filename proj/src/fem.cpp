#include "relacc/fem.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <random>

namespace relacc {

namespace {

// Lagrange shape functions on the reference element [0, 1] with k+1
// equispaced nodes.
double shape(int degree, int j, double t) {
  double v = 1.0;
  const double tj = static_cast<double>(j) / degree;
  for (int i = 0; i <= degree; ++i) {
    if (i == j) continue;
    const double ti = static_cast<double>(i) / degree;
    v *= (t - ti) / (tj - ti);
  }
  return v;
}

double shape_deriv(int degree, int j, double t) {
  const double tj = static_cast<double>(j) / degree;
  double sum = 0.0;
  for (int l = 0; l <= degree; ++l) {
    if (l == j) continue;
    const double tl = static_cast<double>(l) / degree;
    double prod = 1.0 / (tj - tl);
    for (int i = 0; i <= degree; ++i) {
      if (i == j || i == l) continue;
      const double ti = static_cast<double>(i) / degree;
      prod *= (t - ti) / (tj - ti);
    }
    sum += prod;
  }
  return sum;
}

// Dense LU with partial pivoting; the systems here are a few hundred
// unknowns at most.
std::vector<double> solve_dense(std::vector<std::vector<double>> A,
                                std::vector<double> rhs) {
  const int n = static_cast<int>(rhs.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(A[r][col]) > std::abs(A[pivot][col])) pivot = r;
    assert(A[pivot][col] != 0.0 && "singular Galerkin system");
    std::swap(A[col], A[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int r = col + 1; r < n; ++r) {
      const double f = A[r][col] / A[col][col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> x(static_cast<size_t>(n));
  for (int r = n - 1; r >= 0; --r) {
    double s = rhs[r];
    for (int c = r + 1; c < n; ++c) s -= A[r][c] * x[static_cast<size_t>(c)];
    x[static_cast<size_t>(r)] = s / A[r][r];
  }
  return x;
}

int find_element(const Mesh1D& mesh, double x) {
  const auto& nodes = mesh.nodes;
  if (x <= nodes.front()) return 0;
  if (x >= nodes.back()) return mesh.n_elements() - 1;
  const auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
  return static_cast<int>(it - nodes.begin()) - 1;
}

}  // namespace

double Mesh1D::h() const {
  double hmax = 0.0;
  for (size_t i = 1; i < nodes.size(); ++i)
    hmax = std::max(hmax, nodes[i] - nodes[i - 1]);
  return hmax;
}

void Mesh1D::validate() const {
  if (nodes.size() < 2) throw ParameterError("mesh needs at least 2 nodes");
  for (size_t i = 1; i < nodes.size(); ++i)
    if (!(nodes[i] > nodes[i - 1]))
      throw ParameterError("mesh nodes must be strictly increasing");
}

Mesh1D Mesh1D::uniform(double a, double b, int n_elements) {
  if (!(a < b) || n_elements < 1)
    throw ParameterError("invalid mesh range or element count");
  Mesh1D mesh;
  mesh.nodes.resize(static_cast<size_t>(n_elements) + 1);
  for (int i = 0; i <= n_elements; ++i)
    mesh.nodes[static_cast<size_t>(i)] = a + (b - a) * i / n_elements;
  mesh.nodes.front() = a;
  mesh.nodes.back() = b;
  return mesh;
}

Mesh1D Mesh1D::jittered(double a, double b, int n_elements, double jitter_frac,
                        std::uint64_t seed) {
  if (jitter_frac < 0.0 || jitter_frac > 0.45)
    throw ParameterError("jitter_frac must be in [0, 0.45]");
  Mesh1D mesh = uniform(a, b, n_elements);
  const double h = (b - a) / n_elements;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> shift(-jitter_frac * h,
                                               jitter_frac * h);
  for (size_t i = 1; i + 1 < mesh.nodes.size(); ++i) mesh.nodes[i] += shift(rng);
  mesh.validate();
  return mesh;
}

ManufacturedProblem ManufacturedProblem::sin_pi() {
  ManufacturedProblem p;
  p.name = "sin-pi";
  p.exact_u = [](double x) { return std::sin(M_PI * x); };
  p.exact_du = [](double x) { return M_PI * std::cos(M_PI * x); };
  p.forcing_f = [](double x) { return M_PI * M_PI * std::sin(M_PI * x); };
  return p;
}

ManufacturedProblem ManufacturedProblem::monomial(int d) {
  ManufacturedProblem p;
  p.name = "x^" + std::to_string(d);
  p.exact_u = [d](double x) { return std::pow(x, d); };
  p.exact_du = [d](double x) {
    return d == 0 ? 0.0 : d * std::pow(x, d - 1);
  };
  p.forcing_f = [d](double x) {
    return d < 2 ? 0.0 : -d * (d - 1) * std::pow(x, d - 2);
  };
  return p;
}

double FeSolution::value(double x) const {
  const int e = find_element(mesh, x);
  const double x0 = mesh.nodes[static_cast<size_t>(e)];
  const double x1 = mesh.nodes[static_cast<size_t>(e) + 1];
  const double t = (x - x0) / (x1 - x0);
  double v = 0.0;
  for (int j = 0; j <= degree; ++j)
    v += coefficients[static_cast<size_t>(e * degree + j)] *
         shape(degree, j, t);
  return v;
}

double FeSolution::derivative(double x) const {
  const int e = find_element(mesh, x);
  const double x0 = mesh.nodes[static_cast<size_t>(e)];
  const double x1 = mesh.nodes[static_cast<size_t>(e) + 1];
  const double t = (x - x0) / (x1 - x0);
  double v = 0.0;
  for (int j = 0; j <= degree; ++j)
    v += coefficients[static_cast<size_t>(e * degree + j)] *
         shape_deriv(degree, j, t);
  return v / (x1 - x0);
}

FeSolution solve_poisson_1d(const ManufacturedProblem& problem,
                            const Mesh1D& mesh, int degree) {
  mesh.validate();
  if (degree < 1 || degree > 3)
    throw ParameterError("degree must be in {1, 2, 3}");
  const int ne = mesh.n_elements();
  const int ndof = degree * ne + 1;

  std::vector<std::vector<double>> A(
      static_cast<size_t>(ndof), std::vector<double>(static_cast<size_t>(ndof), 0.0));
  std::vector<double> rhs(static_cast<size_t>(ndof), 0.0);

  const GaussRule gauss = gauss_legendre(degree + 2);
  const int nq = static_cast<int>(gauss.nodes.size());

  for (int e = 0; e < ne; ++e) {
    const double x0 = mesh.nodes[static_cast<size_t>(e)];
    const double x1 = mesh.nodes[static_cast<size_t>(e) + 1];
    const double len = x1 - x0;
    for (int q = 0; q < nq; ++q) {
      const double t = 0.5 * (1.0 + gauss.nodes[static_cast<size_t>(q)]);
      const double w = 0.5 * gauss.weights[static_cast<size_t>(q)];
      const double x = x0 + t * len;
      const double fw = w * len * problem.forcing_f(x);
      for (int i = 0; i <= degree; ++i) {
        const int gi = e * degree + i;
        const double si = shape(degree, i, t);
        const double di = shape_deriv(degree, i, t);
        rhs[static_cast<size_t>(gi)] += fw * si;
        for (int j = 0; j <= degree; ++j) {
          const int gj = e * degree + j;
          A[static_cast<size_t>(gi)][static_cast<size_t>(gj)] +=
              w / len * di * shape_deriv(degree, j, t);
        }
      }
    }
  }

  // Exact Dirichlet values at the endpoints.
  const auto impose = [&](int row, double value) {
    std::fill(A[static_cast<size_t>(row)].begin(),
              A[static_cast<size_t>(row)].end(), 0.0);
    A[static_cast<size_t>(row)][static_cast<size_t>(row)] = 1.0;
    rhs[static_cast<size_t>(row)] = value;
  };
  impose(0, problem.exact_u(mesh.a()));
  impose(ndof - 1, problem.exact_u(mesh.b()));

  FeSolution sol;
  sol.mesh = mesh;
  sol.degree = degree;
  sol.coefficients = solve_dense(std::move(A), std::move(rhs));
  return sol;
}

double error_norm(const FeSolution& solution,
                  const ManufacturedProblem& problem, int m, double p,
                  int n_gauss) {
  if (m < 0 || m > 1)
    throw ParameterError("error_norm supports m in {0, 1} only");
  if (!(p >= 1.0) || std::isinf(p))
    throw ParameterError("error_norm requires 1 <= p < infinity");
  const int k = solution.degree;
  const int nq = (n_gauss > 0) ? n_gauss : k + 3;
  const GaussRule gauss = gauss_legendre(nq);

  double acc = 0.0;
  const auto& nodes = solution.mesh.nodes;
  for (size_t e = 0; e + 1 < nodes.size(); ++e) {
    const double x0 = nodes[e];
    const double x1 = nodes[e + 1];
    const double half = 0.5 * (x1 - x0);
    const double mid = 0.5 * (x0 + x1);
    for (size_t q = 0; q < gauss.nodes.size(); ++q) {
      const double x = mid + half * gauss.nodes[q];
      const double w = half * gauss.weights[q];
      const double e0 = problem.exact_u(x) - solution.value(x);
      acc += w * std::pow(std::abs(e0), p);
      if (m >= 1) {
        const double e1 = problem.exact_du(x) - solution.derivative(x);
        acc += w * std::pow(std::abs(e1), p);
      }
    }
  }
  return std::pow(acc, 1.0 / p);
}

}  // namespace relacc
