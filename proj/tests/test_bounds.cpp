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
#include "dpdens/bounds.hpp"
#include "dpdens/densities.hpp"
#include "dpdens/quadrature.hpp"
#include "dpdens/rng.hpp"

using namespace dpdens;

TEST_CASE("total variation") {
  const UniformDensity uniform;
  const PiecewiseLinearDensity tri = make_triangle(1.0, 0.5, 0.1);
  CHECK(tv(tri, tri) == 0.0);
  // Frozen piecewise-exact value L h^2 (1-h)^2 = 0.0081 <= L h^2.
  CHECK(tv(uniform, tri) == doctest::Approx(0.0081).epsilon(1e-10));
  CHECK(tv(uniform, tri) <= 0.01);

  // tv agrees with 1 - integral of min(p, q).
  const PiecewiseLinearDensity saw = make_saw(1.0, 3, {1, 0, 1}, 0.1);
  for (const Density* q : {static_cast<const Density*>(&tri),
                           static_cast<const Density*>(&saw)}) {
    const double direct = tv(uniform, *q);
    const double via_min =
        1.0 - integrate([&](double x) { return std::min(1.0, (*q)(x)); }, 0.0,
                        1.0, 1e-11);
    CHECK(direct == doctest::Approx(via_min).epsilon(1e-9));
  }

  // Saw pairs against the analytic cap m L h^2.
  const PiecewiseLinearDensity saw2 = make_saw(1.0, 3, {0, 1, 0}, 0.1);
  CHECK(tv(saw, saw2) <= 3.0 * 1.0 * 0.01 + 1e-12);
}

TEST_CASE("kl divergence") {
  const UniformDensity uniform;
  const PiecewiseLinearDensity saw = make_saw(1.0, 3, {1, 0, 1}, 0.1);
  CHECK(kl(saw, saw) == doctest::Approx(0.0).epsilon(1e-12));
  // Frozen independent quadrature oracle.
  CHECK(kl(uniform, saw) ==
        doctest::Approx(0.00045531399776105465).epsilon(1e-7));

  const PiecewiseLinearDensity saw5 = make_saw(1.0, 3, {1, 1, 0}, 0.05);
  CHECK(kl(uniform, saw5) <=
        (1.0 / 3.0) * 2.0 * std::pow(0.05, 3.0) * (2.0 - 6.0 * 0.05) + 1e-12);

  const SmoothBumpPacking bump = make_bump_packing(1.0, 1, 4, {1, 1, 1, 1},
                                                   0.1);
  CHECK(kl(bump, uniform) <= 4.0 * std::pow(0.1, 3.0) *
                                 bump.kernel_sq_integral() + 1e-12);

  // Support violation: q vanishes on half the interval while p does not.
  const PiecewiseLinearDensity half({0.0, 0.5, 1.0}, {4.0, 0.0, 0.0});
  CHECK_THROWS_AS(kl(uniform, half), std::domain_error);
}

TEST_CASE("squared l2 distance") {
  const UniformDensity uniform;
  const PiecewiseLinearDensity tri = make_triangle(1.0, 0.5, 0.1);
  // Frozen piecewise-exact value (Simpson is exact on quadratics).
  CHECK(l2_sq(uniform, tri) ==
        doctest::Approx(5.666666666666667e-4).epsilon(1e-12));
  CHECK(l2_sq(tri, tri) == 0.0);
}

TEST_CASE("renyi gaussian closed form") {
  CHECK(renyi_gaussian(2.0, 0.0, 1.0) == 0.0);
  CHECK(renyi_gaussian(2.0, 1.0, 1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(renyi_gaussian(1.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(renyi_gaussian(2.0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("varshamov gilbert codes") {
  RandomStream stream(1);
  const CodeSet c8 = varshamov_gilbert(8, stream);
  CHECK(c8.words.size() >= 2);
  CHECK(verify_code(c8));

  const CodeSet c16 = varshamov_gilbert(16, stream);
  CHECK(c16.words.size() >= 4);
  for (std::size_t i = 0; i < c16.words.size(); ++i)
    for (std::size_t j = i + 1; j < c16.words.size(); ++j)
      CHECK(hamming(c16.words[i], c16.words[j]) >= 2);
  CHECK(verify_code(c16));

  // Deterministic given the stream seed.
  RandomStream again(1);
  CHECK(varshamov_gilbert(8, again).words == c8.words);

  CodeSet broken = c8;
  broken.words.push_back(broken.words[1]);  // duplicate at distance 0
  CHECK_FALSE(verify_code(broken));
}

TEST_CASE("packings") {
  auto uniform = std::make_shared<UniformDensity>();
  auto tri = std::make_shared<PiecewiseLinearDensity>(
      make_triangle(1.0, 0.5, 0.1));
  const PackingFamily packing = make_packing({uniform, tri});
  CHECK(packing.pairwise_l2[0][1] == packing.pairwise_l2[1][0]);
  CHECK(packing.pairwise_l2[0][0] == 0.0);
  CHECK(packing.omega ==
        doctest::Approx(0.5 * std::sqrt(5.666666666666667e-4)));
}

TEST_CASE("le cam bound") {
  // Indistinguishable pair: always 1/2.
  CHECK(lecam_bound(0.0, 10, std::nullopt) == 0.5);
  CHECK(lecam_bound(0.0, 10, PrivacyBudget::Pure(0.1)) == 0.5);
  CHECK(lecam_bound(0.0, 10, PrivacyBudget::ZCDP(0.1)) == 0.5);

  CHECK(lecam_bound(0.01, 100, PrivacyBudget::ZCDP(0.02)) ==
        doctest::Approx(0.45).epsilon(1e-12));
  // Frozen direct evaluation of the (eps, delta = 0) formula.
  CHECK(lecam_bound(0.01, 100, PrivacyBudget::Pure(0.1)) ==
        doctest::Approx(0.45459195215470083).epsilon(1e-12));

  // Monotone in n and in the budget parameter, always within [0, 1/2].
  double prev = 0.5;
  for (long n : {1L, 10L, 100L, 1000L}) {
    const double v = lecam_bound(0.05, n, PrivacyBudget::Pure(0.2));
    CHECK(v <= prev + 1e-15);
    CHECK(v >= 0.0);
    CHECK(v <= 0.5);
    prev = v;
  }
  prev = 0.5;
  for (double eps : {0.01, 0.1, 1.0, 10.0}) {
    const double v = lecam_bound(0.05, 50, PrivacyBudget::Pure(eps));
    CHECK(v <= prev + 1e-15);
    prev = v;
  }
}

TEST_CASE("fano bounds") {
  const std::vector<std::vector<double>> zeros(16,
                                               std::vector<double>(16, 0.0));
  CHECK(fano_bound(zeros, 16, 100, PrivacyBudget::Pure(1.0)) ==
        doctest::Approx(0.6393262397777592).epsilon(1e-12));
  CHECK(fano_bound_classical(0.0, 16, 100) ==
        doctest::Approx(0.6393262397777592).epsilon(1e-12));

  // M = 2 instantiation: the ln 2 denominator makes the raw value negative
  // here, so the clamp to [0, 1] applies.
  const std::vector<std::vector<double>> two(2, std::vector<double>(2, 0.0));
  CHECK(fano_bound(two, 2, 5, PrivacyBudget::Pure(1.0)) ==
        std::max(0.0, 1.0 - 1.0 / std::log(2.0)));

  // Independent re-expansion of both formulas on a nontrivial matrix.
  std::vector<std::vector<double>> t(3, std::vector<double>(3, 0.0));
  t[0][1] = t[1][0] = 0.02;
  t[0][2] = t[2][0] = 0.03;
  t[1][2] = t[2][1] = 0.015;
  const long n = 5;
  const double eps = 0.1, rho = 0.09;
  double sum_pure = 0.0, sum_zcdp = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double s = 2.0 * t[i][j] / (1.0 + t[i][j]);
      sum_pure += s;
      sum_zcdp += s / n + s * s;
    }
  CHECK(fano_bound(t, 3, n, PrivacyBudget::Pure(eps)) ==
        doctest::Approx(1.0 - (1.0 + n * eps / 9.0 * sum_pure) /
                                  std::log(3.0)).epsilon(1e-12));
  CHECK(fano_bound(t, 3, n, PrivacyBudget::ZCDP(rho)) ==
        doctest::Approx(1.0 - (1.0 + static_cast<double>(n) * n * rho / 9.0 *
                                         sum_zcdp) /
                                  std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("assouad bound") {
  CHECK(assouad_bound(1.0, 8, std::vector<double>(8, 0.0), 10, 0.1) ==
        doctest::Approx(8.0 / 32.0));
  CHECK(assouad_bound(1.0, 4, std::vector<double>(4, 1.0), 1000, 2.0) == 0.0);
  CHECK(assouad_bound(1e-4, 8, std::vector<double>(8, 0.005), 100, 0.08) ==
        doctest::Approx(2.25e-5).epsilon(1e-12));
}

TEST_CASE("theoretical rates") {
  const ClassSpec lip{ClassSpec::Kind::kLipschitz, 1.0, 1};
  const RateExponents a =
      theoretical_rate(lip, RiskMetricKind::kL2, PrivacyBudget::Pure(1.0));
  CHECK(a.nonprivate == doctest::Approx(-2.0 / 3.0));
  CHECK(a.private_upper == doctest::Approx(-1.0));
  CHECK(a.private_lower == doctest::Approx(-1.0));
  CHECK_FALSE(a.gap);

  const ClassSpec sob1{ClassSpec::Kind::kPeriodicSobolev, 1.0, 1};
  const RateExponents b =
      theoretical_rate(sob1, RiskMetricKind::kL2, PrivacyBudget::ZCDP(1.0));
  CHECK(b.nonprivate == doctest::Approx(-2.0 / 3.0));
  CHECK(b.private_upper == doctest::Approx(-1.0));
  CHECK(b.private_lower == doctest::Approx(-1.0));
  CHECK_FALSE(b.gap);

  const ClassSpec sob2{ClassSpec::Kind::kPeriodicSobolev, 1.0, 2};
  const RateExponents c =
      theoretical_rate(sob2, RiskMetricKind::kL2, PrivacyBudget::Pure(1.0));
  CHECK(c.nonprivate == doctest::Approx(-4.0 / 5.0));
  CHECK(c.private_upper == doctest::Approx(-8.0 / 7.0));
  CHECK(c.private_lower == doctest::Approx(-4.0 / 3.0));
  CHECK(c.gap);
}
