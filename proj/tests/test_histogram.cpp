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
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "dpdens/histogram.hpp"
#include "dpdens/rng.hpp"

using namespace dpdens;

TEST_CASE("bandwidth tuning") {
  CHECK(histogram::tuned_bandwidth(1000, std::nullopt) == doctest::Approx(0.1));
  CHECK(histogram::tuned_bandwidth(1000, PrivacyBudget::Pure(0.001)) == 1.0);
  CHECK(histogram::tuned_bandwidth(1000000, PrivacyBudget::Pure(0.01)) ==
        doctest::Approx(0.01));
  CHECK_THROWS(histogram::tuned_bandwidth(1000,
                                          PrivacyBudget::Approx(1.0, 1e-6)));
  // 1/h is always an integer.
  for (int n : {7, 50, 333, 9999}) {
    const double h = histogram::tuned_bandwidth(n, std::nullopt);
    CHECK(std::fabs(1.0 / h - std::lround(1.0 / h)) < 1e-9);
  }
}

TEST_CASE("noise scale per budget") {
  CHECK(histogram::noise_scale(std::nullopt) == 0.0);
  CHECK(histogram::noise_scale(PrivacyBudget::Pure(0.5)) == 4.0);
  CHECK(histogram::noise_scale(PrivacyBudget::ZCDP(0.25)) == 2.0);
  CHECK_THROWS(histogram::noise_scale(PrivacyBudget::Approx(1.0, 1e-6)));
}

TEST_CASE("fit and eval") {
  RandomStream stream(0);
  const std::vector<double> data = {0.1, 0.2, 0.3, 0.4};
  const HistogramEstimate est = histogram::fit(data, 0.5, std::nullopt, stream);
  REQUIRE(est.noisy_heights.size() == 2);
  CHECK(est.noisy_heights[0] == 2.0);
  CHECK(est.noisy_heights[1] == 0.0);
  CHECK(histogram::eval(est, 0.25) == 2.0);
  CHECK(histogram::eval(est, 0.75) == 0.0);
  CHECK(histogram::eval(est, 1.0) == 0.0);  // closed last bin
  CHECK(histogram::eval(est, 0.5) == 0.0);  // right-open boundary
  CHECK_THROWS_AS(histogram::fit({0.5, 1.5}, 0.5, std::nullopt, stream),
                  std::invalid_argument);
  CHECK_THROWS_AS(histogram::eval(est, 1.5), std::invalid_argument);
  CHECK_THROWS(histogram::fit(data, 0.3, std::nullopt, stream));  // 1/h not int
}

TEST_CASE("noiseless estimator is a density") {
  RandomStream stream(3);
  std::vector<double> data;
  for (int i = 0; i < 1000; ++i) data.push_back(stream.uniform());
  const HistogramEstimate est = histogram::fit(data, 0.1, std::nullopt, stream);
  double mass = 0.0;
  for (double v : est.noisy_heights) {
    CHECK(v >= 0.0);
    mass += v * est.h;
  }
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("uniform counts concentrate") {
  RandomStream stream(11);
  const int n = 100000;
  std::vector<double> data;
  data.reserve(n);
  for (int i = 0; i < n; ++i) data.push_back(stream.uniform());
  const HistogramEstimate est = histogram::fit(data, 0.1, std::nullopt, stream);
  // Binomial standard error of a height: sqrt(p(1-p)/n)/h with p = 0.1.
  const double se = std::sqrt(0.1 * 0.9 / n) / 0.1;
  for (double v : est.noisy_heights) CHECK(std::fabs(v - 1.0) <= 4.0 * se);
}

TEST_CASE("privacy noise variance identity") {
  // Fixed dataset, repeated fits: per-bin variance must equal
  // Var(Z)/(nh)^2 with Var(Z) = 2 (2/eps)^2 for the Laplace branch.
  const std::vector<double> data = {0.1, 0.3, 0.55, 0.72, 0.9};
  const double h = 0.5, eps = 1.0;
  const double n = static_cast<double>(data.size());
  RandomStream stream(99);
  const int refits = 100000;
  double sum = 0.0, sumsq = 0.0;
  for (int r = 0; r < refits; ++r) {
    RandomStream s = stream.split(static_cast<std::uint64_t>(r));
    const HistogramEstimate est =
        histogram::fit(data, h, PrivacyBudget::Pure(eps), s);
    sum += est.noisy_heights[0];
    sumsq += est.noisy_heights[0] * est.noisy_heights[0];
  }
  const double mean = sum / refits;
  const double var = sumsq / refits - mean * mean;
  const double target = 2.0 * (2.0 / eps) * (2.0 / eps) / (n * h * n * h);
  CHECK(var == doctest::Approx(target).epsilon(0.05));
}

TEST_CASE("simplex projection") {
  HistogramEstimate est{0.5, {3.0, -1.0}, 4, std::nullopt};
  const HistogramEstimate proj = histogram::project_to_simplex(est);
  CHECK(proj.noisy_heights[1] == 0.0);
  CHECK(proj.noisy_heights[0] * proj.h == doctest::Approx(1.0));
}
