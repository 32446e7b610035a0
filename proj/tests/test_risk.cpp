// Copyright 2026 The dpdens Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "dpdens/risk.hpp"
#include "dpdens/rng.hpp"

using namespace dpdens;

TEST_CASE("pairwise sum") {
  const std::vector<double> v = {1.0, 2.0, 3.0, 4.0, 5.0};
  CHECK(pairwise_sum(v) == 15.0);
  CHECK(pairwise_sum({}) == 0.0);
  CHECK(pairwise_sum({7.5}) == 7.5);
}

TEST_CASE("noiseless order-1 projection of uniform has zero risk") {
  EstimatorConfig est;
  est.kind = EstimatorConfig::Kind::kProjection;
  est.manual_N = 1;
  const UniformDensity uniform;
  const RiskReport r = mc_risk(est, uniform, {RiskMetricKind::kL2, 0.5}, 50,
                               100, 0);
  // The reference coefficients come from quadrature, so coefficients past
  // phi_1 are roundoff-sized rather than exactly zero.
  CHECK(r.risk_mean <= 1e-20);
  CHECK(r.risk_stderr <= 1e-20);
}

TEST_CASE("risk reports are bitwise reproducible") {
  EstimatorConfig est;
  est.kind = EstimatorConfig::Kind::kHistogram;
  est.budget = PrivacyBudget::Pure(0.5);
  const PiecewiseLinearDensity saw = make_saw(1.0, 3, {1, 0, 1}, 0.05);
  const RiskReport a = mc_risk(est, saw, {RiskMetricKind::kL2, 0.5}, 500, 100,
                               1234);
  const RiskReport b = mc_risk(est, saw, {RiskMetricKind::kL2, 0.5}, 500, 100,
                               1234);
  CHECK(a.risk_mean == b.risk_mean);
  CHECK(a.risk_stderr == b.risk_stderr);
  const RiskReport c = mc_risk(est, saw, {RiskMetricKind::kL2, 0.5}, 500, 100,
                               1235);
  CHECK(a.risk_mean != c.risk_mean);
}

TEST_CASE("pure sampling variance at a flat point") {
  // Noiseless histogram on uniform data: zero bias, binomial variance only,
  // so the pointwise MSE is below 1/(nh) (L + 1) with L = 0.
  EstimatorConfig est;
  est.kind = EstimatorConfig::Kind::kHistogram;
  est.manual_h = 0.1;
  const UniformDensity uniform;
  const RiskReport r = mc_risk(
      est, uniform, {RiskMetricKind::kPointwise, 0.55}, 10000, 400, 7);
  CHECK(r.risk_mean <= 1.0 / (10000.0 * 0.1) + 4.0 * r.risk_stderr);
}

TEST_CASE("metric validation") {
  EstimatorConfig est;
  est.kind = EstimatorConfig::Kind::kHistogram;
  est.manual_N = 4;  // projection knob on a histogram config
  const UniformDensity uniform;
  CHECK_THROWS_AS(
      mc_risk(est, uniform, {RiskMetricKind::kL2, 0.5}, 100, 100, 0),
      std::invalid_argument);
  EstimatorConfig ok;
  ok.kind = EstimatorConfig::Kind::kHistogram;
  CHECK_THROWS_AS(mc_risk(ok, uniform, {RiskMetricKind::kL2, 0.5}, 100, 99, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      mc_risk(ok, uniform, {RiskMetricKind::kPointwise, 1.5}, 100, 100, 0),
      std::invalid_argument);
}

TEST_CASE("stderr shrinks roughly as 1/sqrt(2) when reps double") {
  EstimatorConfig est;
  est.kind = EstimatorConfig::Kind::kHistogram;
  est.manual_h = 0.2;
  const PiecewiseLinearDensity tri = make_triangle(1.0, 0.5, 0.1);
  double ratio_sum = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const RiskReport small = mc_risk(
        est, tri, {RiskMetricKind::kPointwise, 0.5}, 200, 400,
        static_cast<std::uint64_t>(trial) * 1000);
    const RiskReport big = mc_risk(
        est, tri, {RiskMetricKind::kPointwise, 0.5}, 200, 800,
        static_cast<std::uint64_t>(trial) * 1000 + 500);
    ratio_sum += big.risk_stderr / small.risk_stderr;
  }
  CHECK(ratio_sum / 10.0 == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.2));
}

TEST_CASE("rate fitting") {
  std::vector<std::pair<double, double>> exact;
  for (double x : {10.0, 100.0, 1000.0, 10000.0})
    exact.emplace_back(x, 3.0 * std::pow(x, -2.0 / 3.0));
  const RateFit a = fit_rate(exact);
  CHECK(a.slope == doctest::Approx(-2.0 / 3.0).epsilon(1e-10));
  CHECK(a.r_squared == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(a.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-8));

  std::vector<std::pair<double, double>> inverse;
  for (double x : {2.0, 8.0, 64.0}) inverse.emplace_back(x, 5.0 / x);
  CHECK(fit_rate(inverse).slope == doctest::Approx(-1.0).epsilon(1e-10));

  // Multiplicative +/- 5% jitter moves the slope by well under 0.1.
  RandomStream stream(2);
  std::vector<std::pair<double, double>> jittered;
  for (int i = 0; i < 8; ++i) {
    const double x = std::pow(2.0, 4 + i);
    jittered.emplace_back(
        x, std::pow(x, -0.75) * (1.0 + 0.05 * (2.0 * stream.uniform() - 1.0)));
  }
  CHECK(std::fabs(fit_rate(jittered).slope + 0.75) < 0.1);

  CHECK_THROWS_AS(fit_rate({{1.0, 1.0}, {2.0, 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(
      fit_rate({{1.0, 1.0}, {2.0, -0.5}, {3.0, 0.2}}), std::domain_error);
}

TEST_CASE("lower bound never beats the measured risk") {
  EstimatorConfig est;
  est.kind = EstimatorConfig::Kind::kHistogram;
  auto uniform = std::make_shared<UniformDensity>();
  auto tri = std::make_shared<PiecewiseLinearDensity>(
      make_triangle(1.0, 0.5, 0.1));
  const PackingFamily packing = make_packing({uniform, tri});
  const ConsistencyVerdict v = lower_vs_empirical(
      packing, est, 1000, PrivacyBudget::Pure(0.5), 200, 3);
  CHECK(v.consistent);
  CHECK(v.lower_bound >= 0.0);

  // Degenerate packing: identical members, Omega = 0, trivially consistent.
  const PackingFamily degenerate = make_packing({uniform, uniform});
  CHECK(degenerate.omega == 0.0);
  const ConsistencyVerdict d = lower_vs_empirical(
      degenerate, est, 100, std::nullopt, 100, 3);
  CHECK(d.lower_bound == 0.0);
  CHECK(d.consistent);

  // zCDP clamp at large n: the bound collapses to 0.
  const ConsistencyVerdict z = lower_vs_empirical(
      packing, est, 100000, PrivacyBudget::ZCDP(1.0), 100, 3);
  CHECK(z.lower_bound == 0.0);
  CHECK(z.consistent);
}
