#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "relacc/mc.hpp"
#include "relacc/prob.hpp"

using namespace relacc;

TEST_CASE("symmetric bounds give one half") {
  const McEstimate est = mc_head_probability({0, 1, 1}, {1000000, 42, 1});
  CHECK(est.p_hat > 0.498);
  CHECK(est.p_hat < 0.502);
  CHECK(est.n == 1000000);
}

TEST_CASE("asymmetric bounds match the closed form") {
  const McEstimate est = mc_head_probability({0, 1, 2}, {1000000, 42, 1});
  CHECK(est.p_hat > 0.748);
  CHECK(est.p_hat < 0.752);
}

TEST_CASE("a single draw is a bare Bernoulli trial") {
  const McEstimate est = mc_head_probability({0, 1, 2}, {1, 42, 1});
  CHECK((est.p_hat == 0.0 || est.p_hat == 1.0));
  CHECK(est.std_err == 0.0);
}

TEST_CASE("estimates are bit-identical under a fixed config") {
  const McEstimate a = mc_head_probability({0, 1.5, 0.7}, {200000, 99, 1});
  const McEstimate b = mc_head_probability({0, 1.5, 0.7}, {200000, 99, 1});
  CHECK(a.p_hat == b.p_hat);
  CHECK(a.std_err == b.std_err);
}

TEST_CASE("stream count does not change the estimate") {
  const McEstimate one = mc_head_probability({0, 1, 2}, {100001, 7, 1});
  const McEstimate two = mc_head_probability({0, 1, 2}, {100001, 7, 2});
  const McEstimate eight = mc_head_probability({0, 1, 2}, {100001, 7, 8});
  CHECK(one.p_hat == two.p_hat);
  CHECK(one.p_hat == eight.p_hat);
}

TEST_CASE("std_err follows the binomial formula") {
  const McEstimate est = mc_head_probability({0, 1, 3}, {50000, 5, 1});
  CHECK(est.std_err ==
        doctest::Approx(std::sqrt(est.p_hat * (1.0 - est.p_hat) / 50000.0)));
}

TEST_CASE("degenerate bounds and bad configs are rejected") {
  CHECK_THROWS_AS(mc_head_probability({0, 0, 1}, {10, 1, 1}),
                  DegenerateDistributionError);
  CHECK_THROWS_AS(mc_head_probability({0, 1, 1}, {0, 1, 1}), ParameterError);
  CHECK_THROWS_AS(mc_density_histogram({0, 1, 1}, {10, 1, 1}, 0),
                  ParameterError);
}

TEST_CASE("estimates agree with the closed form across seeds and shapes") {
  const struct {
    double b1, b2;
    std::uint64_t seed;
  } cases[] = {
      {1, 1, 1},     {1, 2, 2},    {2, 1, 3},    {0.5, 3, 4},  {3, 0.5, 5},
      {1e-3, 1, 6},  {1, 1e-3, 7}, {10, 11, 8},  {7, 2, 9},    {2, 7, 10},
  };
  for (const auto& c : cases) {
    const BetaPair beta{0, c.b1, c.b2};
    const McEstimate est = mc_head_probability(beta, {200000, c.seed, 1});
    CHECK(std::abs(est.p_hat - head_probability(beta)) <= 4.0 * est.std_err);
  }
}

TEST_CASE("histogram reproduces the triangular density") {
  const BetaPair beta{0, 1, 1};
  const auto bins = mc_density_histogram(beta, {1000000, 42, 1}, 50);
  REQUIRE(bins.size() == 50);
  double total = 0.0;
  double peak = 0.0;
  for (const auto& bin : bins) {
    total += bin.density * (2.0 / 50.0);
    peak = std::max(peak, bin.density);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(peak == doctest::Approx(1.0).epsilon(0.05));
  // Sup deviation from the closed form away from the kinks.
  for (const auto& bin : bins) {
    if (std::abs(bin.center) < 0.1) continue;
    CHECK(std::abs(bin.density - density_z(beta, bin.center)) <= 0.02);
  }
}

TEST_CASE("histogram shows the flat plateau of unequal bounds") {
  const BetaPair beta{0, 1, 2};
  const auto bins = mc_density_histogram(beta, {1000000, 42, 1}, 50);
  for (const auto& bin : bins) {
    if (bin.center > -0.9 && bin.center < -0.1) {
      CHECK(bin.density == doctest::Approx(0.5).epsilon(0.04));
    }
  }
}
