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
#include <vector>

#include "doctest.h"
#include "dpdens/densities.hpp"
#include "dpdens/projection.hpp"
#include "dpdens/quadrature.hpp"
#include "dpdens/rng.hpp"

using namespace dpdens;

TEST_CASE("truncation tuning") {
  CHECK(projection::tuned_truncation(1000, 1, std::nullopt) == 10);
  CHECK(projection::tuned_truncation(1000, 1,
                                     PrivacyBudget::ZCDP(0.032 * 0.032)) == 6);
  CHECK(projection::tuned_truncation(1000, 1, PrivacyBudget::Pure(1e9)) == 10);
  CHECK(projection::tuned_truncation(1, 1, PrivacyBudget::Pure(1e-6)) == 1);
  // Monotone nondecreasing in n and in the budget parameter.
  int prev = 0;
  for (int n : {100, 1000, 10000, 100000}) {
    const int N = projection::tuned_truncation(n, 1, PrivacyBudget::Pure(0.5));
    CHECK(N >= prev);
    prev = N;
  }
  prev = 0;
  for (double eps : {0.01, 0.1, 1.0, 10.0}) {
    const int N =
        projection::tuned_truncation(10000, 1, PrivacyBudget::Pure(eps));
    CHECK(N >= prev);
    prev = N;
  }
}

TEST_CASE("noise scales") {
  CHECK(projection::noise_scale(3, std::nullopt) == 0.0);
  CHECK(projection::noise_scale(3, PrivacyBudget::Pure(0.5)) ==
        doctest::Approx(12.0 * std::sqrt(2.0)));
  CHECK(projection::noise_scale(4, PrivacyBudget::ZCDP(0.25)) ==
        doctest::Approx(8.0));
  CHECK(projection::noise_scale(
            4, PrivacyBudget::Approx(2.0, 1.25 * std::exp(-1.0))) ==
        doctest::Approx(4.0));
}

TEST_CASE("fit basics") {
  RandomStream stream(0);
  const ProjectionEstimate one =
      projection::fit({0.3, 0.7, 0.11}, 1, std::nullopt, stream);
  REQUIRE(one.noisy_coefficients.size() == 1);
  CHECK(one.noisy_coefficients[0] == 1.0);  // phi_1 is constant

  const int n = 100000;
  std::vector<double> data;
  data.reserve(n);
  for (int i = 0; i < n; ++i) data.push_back(stream.uniform());
  const ProjectionEstimate est =
      projection::fit(data, 5, std::nullopt, stream);
  for (int i = 1; i < 5; ++i)
    CHECK(std::fabs(est.noisy_coefficients[static_cast<std::size_t>(i)]) <=
          4.0 * std::sqrt(2.0 / n));

  CHECK_THROWS(projection::fit({0.5, -0.1}, 2, std::nullopt, stream));
}

TEST_CASE("noiseless coefficients are unbiased") {
  const PiecewiseLinearDensity tri = make_triangle(1.0, 0.5, 0.1);
  const FourierSeries truth = fourier_coefficients(tri, 3);
  RandomStream master(5);
  const int reps = 2000, n = 400;
  std::vector<double> sums(3, 0.0), sqs(3, 0.0);
  for (int r = 0; r < reps; ++r) {
    RandomStream s = master.split(static_cast<std::uint64_t>(r));
    const ProjectionEstimate est =
        projection::fit(tri.sample(n, s), 3, std::nullopt, s);
    for (int i = 0; i < 3; ++i) {
      sums[static_cast<std::size_t>(i)] +=
          est.noisy_coefficients[static_cast<std::size_t>(i)];
      sqs[static_cast<std::size_t>(i)] +=
          est.noisy_coefficients[static_cast<std::size_t>(i)] *
          est.noisy_coefficients[static_cast<std::size_t>(i)];
    }
  }
  for (int i = 0; i < 3; ++i) {
    const double mean = sums[static_cast<std::size_t>(i)] / reps;
    const double var =
        sqs[static_cast<std::size_t>(i)] / reps - mean * mean;
    const double se = std::sqrt(var / reps);
    CHECK(std::fabs(mean - truth.coefficients()[static_cast<std::size_t>(i)])
          <= 4.0 * se + 1e-12);
  }
}

TEST_CASE("laplace refit variance identity") {
  const std::vector<double> data = {0.15, 0.4, 0.83};
  const double n = 3.0, eps = 1.0;
  const int N = 2;
  RandomStream master(17);
  const int refits = 100000;
  double sum = 0.0, sumsq = 0.0;
  for (int r = 0; r < refits; ++r) {
    RandomStream s = master.split(static_cast<std::uint64_t>(r));
    const ProjectionEstimate est =
        projection::fit(data, N, PrivacyBudget::Pure(eps), s);
    sum += est.noisy_coefficients[1];
    sumsq += est.noisy_coefficients[1] * est.noisy_coefficients[1];
  }
  const double mean = sum / refits;
  const double var = sumsq / refits - mean * mean;
  const double scale = 2.0 * std::sqrt(2.0) * N / eps;
  CHECK(var == doctest::Approx(2.0 * scale * scale / (n * n)).epsilon(0.05));
}

TEST_CASE("coefficient-space distance") {
  const ProjectionEstimate flat{{1.0}, 10, std::nullopt};
  const FourierSeries uniform({1.0});
  CHECK(projection::l2_distance(flat, uniform).distance == 0.0);

  const ProjectionEstimate sine{{1.0, 1.0 / std::sqrt(2.0), 0.0}, 10,
                                std::nullopt};
  const FourierSeries ref({1.0, 1.0 / std::sqrt(2.0), 0.0});
  CHECK(projection::l2_distance(sine, ref).distance == 0.0);

  const double delta = 0.037;
  const ProjectionEstimate bumped{{1.0, 1.0 / std::sqrt(2.0) + delta, 0.0},
                                  10, std::nullopt};
  CHECK(projection::l2_distance(bumped, ref).distance ==
        doctest::Approx(delta).epsilon(1e-12));
}

TEST_CASE("parseval agrees with quadrature") {
  // Truncated reference: the coefficient-space distance must match direct
  // integration of the squared difference.
  RandomStream stream(23);
  const PiecewiseLinearDensity tri = make_triangle(1.0, 0.5, 0.1);
  const FourierSeries ref = fourier_coefficients(tri, 12);
  const ProjectionEstimate est =
      projection::fit(tri.sample(2000, stream), 6,
                      PrivacyBudget::ZCDP(1.0), stream);
  const double parseval = projection::l2_distance(est, ref).distance;
  const double quad = std::sqrt(integrate(
      [&](double x) {
        const double d = projection::eval(est, x) - ref(x);
        return d * d;
      },
      0.0, 1.0, 1e-12));
  CHECK(parseval == doctest::Approx(quad).epsilon(1e-6));
}

TEST_CASE("sobolev tail bound is reported") {
  const ProjectionEstimate est{{1.0}, 10, std::nullopt};
  const FourierSeries ref({1.0, 0.0, 0.0, 0.0});  // N' = 4
  const L2Distance d = projection::l2_distance(est, ref, 2.0, 1);
  // a_5 = 4 for the odd index 5: tail = L^2 / (pi * 4)^2.
  CHECK(d.tail_bound ==
        doctest::Approx(4.0 / std::pow(3.14159265358979323846 * 4.0, 2.0)));
}
