#include <CLI11.hpp>
#include <stdexcept>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "relacc/csv.hpp"
#include "relacc/empirics.hpp"
#include "relacc/mc.hpp"
#include "relacc/prob.hpp"

namespace {

using namespace relacc;

constexpr int kExitOk = 0;
constexpr int kExitFlag = 2;
constexpr int kExitData = 3;
constexpr int kExitDomain = 4;

struct FlagError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::LowLine: return "low-line";
    case Regime::HighLine: return "high-line";
    case Regime::Degenerate: return "degenerate";
  }
  return "?";
}

struct CurveOpts {
  ModelParams params;
  double hmin = 0.1, hmax = 1.0;
  int n = 100;
  std::string spacing = "linear";
  std::string out;
  bool legacy = false;
  double lambda = 0.0;
};

void add_model_flags(CLI::App* cmd, CurveOpts& o) {
  cmd->add_option("--k1", o.params.pair.k1, "lower polynomial degree")->required();
  cmd->add_option("--k2", o.params.pair.k2, "higher polynomial degree")->required();
  cmd->add_option("--m", o.params.pair.m, "Sobolev order of the error norm")->required();
  cmd->add_option("--p", o.params.pair.p, "Lebesgue exponent (metadata)");
  cmd->add_option("--c1", o.params.c1, "error constant for k1")->required();
  cmd->add_option("--c2", o.params.c2, "error constant for k2")->required();
  auto* lam = cmd->add_option("--lambda", o.lambda, "a priori cap");
  auto* leg = cmd->add_flag("--legacy", o.legacy, "cap-free model");
  lam->excludes(leg);
}

void add_range_flags(CLI::App* cmd, CurveOpts& o) {
  cmd->add_option("--hmin", o.hmin, "smallest mesh size")->required();
  cmd->add_option("--hmax", o.hmax, "largest mesh size")->required();
  cmd->add_option("--n", o.n, "number of sample points");
  cmd->add_option("--spacing", o.spacing, "linear|log")
      ->check(CLI::IsMember({"linear", "log"}));
}

void finish_model(CurveOpts& o, const CLI::App* cmd) {
  if (o.legacy) {
    o.params.lambda = kLambdaInfinite;
  } else if (cmd->count("--lambda")) {
    o.params.lambda = o.lambda;
  } else {
    throw CLI::RequiredError("--lambda or --legacy");
  }
}

void run_curve(const CurveOpts& o) {
  const Spacing spacing =
      (o.spacing == "log") ? Spacing::Log : Spacing::Linear;
  const auto points = sample_curve(o.params, o.hmin, o.hmax, o.n, spacing);
  std::vector<std::vector<double>> rows;
  for (const auto& pt : points) rows.push_back({pt.h, pt.prob});
  write_csv(o.out, "h,probability", rows);

  std::vector<std::pair<std::string, std::string>> meta = {
      {"command", "curve"},
      {"k1", std::to_string(o.params.pair.k1)},
      {"k2", std::to_string(o.params.pair.k2)},
      {"m", std::to_string(o.params.pair.m)},
      {"p", format_double(o.params.pair.p)},
      {"c1", format_double(o.params.c1)},
      {"c2", format_double(o.params.c2)},
      {"lambda", o.params.legacy() ? "infinite" : format_double(o.params.lambda)},
      {"hmin", format_double(o.hmin)},
      {"hmax", format_double(o.hmax)},
      {"n", std::to_string(o.n)},
      {"spacing", o.spacing},
  };
  if (o.params.legacy()) {
    meta.emplace_back("regime", "legacy");
    meta.emplace_back(
        "h_star",
        format_double(std::pow(o.params.c1 / o.params.c2,
                               1.0 / (o.params.pair.k2 - o.params.pair.k1))));
  } else {
    const Breakpoints bp = breakpoints(o.params);
    meta.emplace_back("regime", regime_name(bp.regime));
    meta.emplace_back("h_star", format_double(bp.h_star));
    meta.emplace_back("hslash1", format_double(bp.hslash1));
    meta.emplace_back("hslash2", format_double(bp.hslash2));
  }
  write_meta(o.out, meta);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"probabilistic comparison of numerical method accuracy"};
  app.require_subcommand(1);

  // curve
  CurveOpts curve_opts;
  auto* curve = app.add_subcommand("curve", "export a probability curve as CSV");
  add_model_flags(curve, curve_opts);
  add_range_flags(curve, curve_opts);
  curve->add_option("--out", curve_opts.out, "output CSV path")->required();

  // density
  double d_beta1 = 0, d_beta2 = 0;
  int d_n = 200;
  std::string d_out;
  auto* density = app.add_subcommand("density", "export the difference density as CSV");
  density->add_option("--beta1", d_beta1)->required();
  density->add_option("--beta2", d_beta2)->required();
  density->add_option("--n", d_n, "number of sample points");
  density->add_option("--out", d_out)->required();

  // mc
  double mc_beta1 = 0, mc_beta2 = 0;
  std::uint64_t mc_samples = 0, mc_seed = 0;
  int mc_streams = 1;
  std::string mc_out;
  auto* mc = app.add_subcommand("mc", "Monte Carlo check of the head probability");
  mc->add_option("--beta1", mc_beta1)->required();
  mc->add_option("--beta2", mc_beta2)->required();
  mc->add_option("--samples", mc_samples)->required();
  mc->add_option("--seed", mc_seed);
  mc->add_option("--streams", mc_streams);
  mc->add_option("--out", mc_out)->required();

  // calibrate
  std::string cal_in1, cal_in2, cal_policy = "infinite", cal_curve_out;
  CurveOpts cal_opts;
  double cal_lambda = 0;
  auto* calibrate = app.add_subcommand(
      "calibrate", "fit model constants from two h,err series");
  calibrate->add_option("--in", cal_in1, "CSV series for k1")->required();
  calibrate->add_option("--in2", cal_in2, "CSV series for k2")->required();
  calibrate->add_option("--k1", cal_opts.params.pair.k1)->required();
  calibrate->add_option("--k2", cal_opts.params.pair.k2)->required();
  calibrate->add_option("--m", cal_opts.params.pair.m)->required();
  calibrate->add_option("--p", cal_opts.params.pair.p);
  calibrate->add_option("--lambda-policy", cal_policy, "given|infinite|plateau")
      ->check(CLI::IsMember({"given", "infinite", "plateau"}));
  calibrate->add_option("--lambda", cal_lambda, "cap value for policy 'given'");
  calibrate->add_option("--curve-out", cal_curve_out,
                        "optional: also export the calibrated curve");
  calibrate->add_option("--hmin", cal_opts.hmin);
  calibrate->add_option("--hmax", cal_opts.hmax);
  calibrate->add_option("--n", cal_opts.n);
  calibrate->add_option("--spacing", cal_opts.spacing)
      ->check(CLI::IsMember({"linear", "log"}));

  // demo
  std::string demo_family, demo_preset = "default", demo_out;
  int demo_degree = 1, demo_m = 1;
  double demo_p = 2.0;
  std::string demo_rule = "simpson", demo_scheme = "rk4";
  auto* demo = app.add_subcommand("demo", "generate an h,err series from a built-in problem");
  demo->add_option("--family", demo_family, "fem|quad|ode")
      ->required()
      ->check(CLI::IsMember({"fem", "quad", "ode"}));
  demo->add_option("--preset", demo_preset, "problem preset");
  demo->add_option("--degree", demo_degree, "fem: polynomial degree (1-3)");
  demo->add_option("--m", demo_m, "fem: Sobolev order of the error norm");
  demo->add_option("--p", demo_p, "fem: Lebesgue exponent");
  demo->add_option("--rule", demo_rule, "quad: midpoint|trapezoid|simpson")
      ->check(CLI::IsMember({"midpoint", "trapezoid", "simpson"}));
  demo->add_option("--scheme", demo_scheme, "ode: euler|heun|rk4")
      ->check(CLI::IsMember({"euler", "heun", "rk4"}));
  demo->add_option("--out", demo_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return kExitFlag;
  }

  try {
    if (curve->parsed()) {
      finish_model(curve_opts, curve);
      run_curve(curve_opts);
    } else if (density->parsed()) {
      const BetaPair beta{0.0, d_beta1, d_beta2};
      if (d_n < 2) throw ParameterError("--n must be >= 2");
      std::vector<std::vector<double>> rows;
      for (int i = 0; i < d_n; ++i) {
        const double z =
            -d_beta2 + (d_beta1 + d_beta2) * i / (d_n - 1);
        rows.push_back({z, density_z(beta, z)});
      }
      write_csv(d_out, "z,f", rows);
      write_meta(d_out, {{"command", "density"},
                         {"beta1", format_double(d_beta1)},
                         {"beta2", format_double(d_beta2)},
                         {"n", std::to_string(d_n)}});
    } else if (mc->parsed()) {
      const BetaPair beta{0.0, mc_beta1, mc_beta2};
      const McConfig cfg{mc_samples, mc_seed, mc_streams};
      const McEstimate est = mc_head_probability(beta, cfg);
      const double closed = head_probability(beta);
      write_csv(mc_out, "p_hat,std_err,n,p_closed",
                {{est.p_hat, est.std_err, static_cast<double>(est.n), closed}});
      write_meta(mc_out, {{"command", "mc"},
                          {"beta1", format_double(mc_beta1)},
                          {"beta2", format_double(mc_beta2)},
                          {"samples", std::to_string(mc_samples)},
                          {"seed", std::to_string(mc_seed)},
                          {"streams", std::to_string(mc_streams)}});
    } else if (calibrate->parsed()) {
      const ErrorSeries s1 = read_error_series_csv(cal_in1, "series-k1");
      const ErrorSeries s2 = read_error_series_csv(cal_in2, "series-k2");
      LambdaPolicy policy = LambdaPolicy::infinite();
      if (cal_policy == "given") {
        if (!calibrate->count("--lambda"))
          throw CLI::RequiredError("--lambda (with --lambda-policy given)");
        policy = LambdaPolicy::given(cal_lambda);
      } else if (cal_policy == "plateau") {
        policy = LambdaPolicy::plateau_detect();
      }
      const CalibrationResult result =
          fit_model(s1, s2, cal_opts.params.pair, policy);
      std::cout << "c1=" << format_double(result.params.c1) << "\n"
                << "c2=" << format_double(result.params.c2) << "\n"
                << "lambda="
                << (result.params.legacy() ? "infinite"
                                           : format_double(result.params.lambda))
                << "\n"
                << "q1=" << format_double(result.fit1.q) << "\n"
                << "q2=" << format_double(result.fit2.q) << "\n"
                << "r2_1=" << format_double(result.fit1.r2) << "\n"
                << "r2_2=" << format_double(result.fit2.r2) << "\n";
      for (const auto& w : result.warnings)
        std::cout << "warning=" << w << "\n";
      if (!cal_curve_out.empty()) {
        CurveOpts co = cal_opts;
        co.params = result.params;
        co.out = cal_curve_out;
        co.legacy = result.params.legacy();
        run_curve(co);
      }
    } else if (demo->parsed()) {
      ErrorSeries series;
      if (demo_family == "fem") {
        if (demo_preset != "sin-pi" && demo_preset != "default")
          throw FlagError("unknown fem preset '" + demo_preset +
                               "'; available: sin-pi");
        std::vector<double> hs;
        for (int n = 8; n <= 128; n *= 2) hs.push_back(1.0 / n);
        series = fem_error_series(ManufacturedProblem::sin_pi(), demo_degree,
                                  demo_m, demo_p, hs);
      } else if (demo_family == "quad") {
        if (demo_preset != "expx" && demo_preset != "default")
          throw FlagError("unknown quad preset '" + demo_preset +
                               "'; available: expx");
        const QuadRule rule = demo_rule == "midpoint" ? QuadRule::Midpoint
                              : demo_rule == "trapezoid" ? QuadRule::Trapezoid
                                                         : QuadRule::Simpson;
        series = quadrature_error_series(
            [](double x) { return std::exp(x); }, std::exp(1.0) - 1.0, 0.0,
            1.0, rule, {2, 4, 8, 16, 32, 64});
      } else {
        if (demo_preset != "expy" && demo_preset != "default")
          throw FlagError("unknown ode preset '" + demo_preset +
                               "'; available: expy");
        const OdeScheme scheme = demo_scheme == "euler" ? OdeScheme::Euler
                                 : demo_scheme == "heun" ? OdeScheme::Heun
                                                         : OdeScheme::Rk4;
        series = ode_error_series(OdeProblem::exp_growth(), scheme,
                                  {0.1, 0.05, 0.025, 0.0125, 0.00625});
      }
      write_error_series_csv(demo_out, series);
      write_meta(demo_out, {{"command", "demo"},
                            {"family", demo_family},
                            {"preset", demo_preset},
                            {"method", series.method_label}});
    }
  } catch (const CLI::RequiredError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFlag;
  } catch (const FlagError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFlag;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
