#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relacc/calibrate.hpp"
#include "relacc/empirics.hpp"
#include "relacc/mc.hpp"
#include "relacc/prob.hpp"

namespace py = pybind11;
using namespace relacc;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Probabilistic comparison of numerical method accuracy";

  py::register_exception<ParameterError>(m, "ParameterError",
                                         PyExc_ValueError);
  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

  py::class_<ElementPair>(m, "ElementPair")
      .def(py::init([](int k1, int k2, int mm, double p) {
             ElementPair pair{k1, k2, mm, p};
             pair.validate();
             return pair;
           }),
           py::arg("k1"), py::arg("k2"), py::arg("m"), py::arg("p") = 2.0)
      .def_readonly("k1", &ElementPair::k1)
      .def_readonly("k2", &ElementPair::k2)
      .def_readonly("m", &ElementPair::m)
      .def_readonly("p", &ElementPair::p);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](const ElementPair& pair, double c1, double c2,
                       py::object lambda) {
             ModelParams params{pair, c1, c2, kLambdaInfinite};
             if (!lambda.is_none()) params.lambda = lambda.cast<double>();
             params.validate();
             return params;
           }),
           py::arg("pair"), py::arg("c1"), py::arg("c2"),
           py::arg("lambda_") = py::none())
      .def_readonly("pair", &ModelParams::pair)
      .def_readonly("c1", &ModelParams::c1)
      .def_readonly("c2", &ModelParams::c2)
      .def_readonly("lambda_", &ModelParams::lambda)
      .def("legacy", &ModelParams::legacy);

  py::class_<BetaPair>(m, "BetaPair")
      .def(py::init([](double beta1, double beta2, double h) {
             return BetaPair{h, beta1, beta2};
           }),
           py::arg("beta1"), py::arg("beta2"), py::arg("h") = 0.0)
      .def_readonly("h", &BetaPair::h)
      .def_readonly("beta1", &BetaPair::beta1)
      .def_readonly("beta2", &BetaPair::beta2);

  py::enum_<Regime>(m, "Regime")
      .value("LowLine", Regime::LowLine)
      .value("HighLine", Regime::HighLine)
      .value("Degenerate", Regime::Degenerate);

  py::class_<Breakpoints>(m, "Breakpoints")
      .def_readonly("hslash1", &Breakpoints::hslash1)
      .def_readonly("hslash2", &Breakpoints::hslash2)
      .def_readonly("h_star", &Breakpoints::h_star)
      .def_readonly("regime", &Breakpoints::regime);

  m.def("beta_pair", &beta_pair, py::arg("params"), py::arg("h"));
  m.def("breakpoints", &breakpoints, py::arg("params"));
  m.def("density_z", &density_z, py::arg("beta"), py::arg("z"));
  m.def("cdf_z", &cdf_z, py::arg("beta"), py::arg("z"));
  m.def("head_probability", &head_probability, py::arg("beta"));
  m.def("probability_curve", &probability_curve, py::arg("params"),
        py::arg("h"));
  m.def(
      "sample_curve",
      [](const ModelParams& params, double h_min, double h_max, int n,
         const std::string& spacing) {
        const Spacing s = spacing == "log" ? Spacing::Log : Spacing::Linear;
        std::vector<std::pair<double, double>> out;
        for (const auto& pt : sample_curve(params, h_min, h_max, n, s))
          out.emplace_back(pt.h, pt.prob);
        return out;
      },
      py::arg("params"), py::arg("h_min"), py::arg("h_max"), py::arg("n"),
      py::arg("spacing") = "linear");

  py::class_<McEstimate>(m, "McEstimate")
      .def_readonly("p_hat", &McEstimate::p_hat)
      .def_readonly("std_err", &McEstimate::std_err)
      .def_readonly("n", &McEstimate::n);

  m.def(
      "mc_head_probability",
      [](const BetaPair& beta, std::uint64_t n_samples, std::uint64_t seed,
         int n_streams) {
        return mc_head_probability(beta, {n_samples, seed, n_streams});
      },
      py::arg("beta"), py::arg("n_samples"), py::arg("seed") = 0,
      py::arg("n_streams") = 1);

  py::class_<PowerLawFit>(m, "PowerLawFit")
      .def_readonly("c", &PowerLawFit::c)
      .def_readonly("q", &PowerLawFit::q)
      .def_readonly("r2", &PowerLawFit::r2);

  m.def(
      "fit_power_law",
      [](const std::vector<std::pair<double, double>>& samples,
         const std::string& label) {
        ErrorSeries series;
        series.method_label = label;
        for (const auto& [h, err] : samples) series.samples.push_back({h, err});
        return fit_power_law(series);
      },
      py::arg("samples"), py::arg("label") = "series");

  m.def(
      "fem_error_exponent",
      [](int degree, int mm, double p) {
        std::vector<double> hs;
        for (int n = 8; n <= 128; n *= 2) hs.push_back(1.0 / n);
        return fit_power_law(fem_error_series(ManufacturedProblem::sin_pi(),
                                              degree, mm, p, hs))
            .q;
      },
      py::arg("degree"), py::arg("m") = 1, py::arg("p") = 2.0,
      "Fitted convergence order of the built-in Poisson demo problem");
}
