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

#include "dpdens/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dpdens {
namespace histogram {

namespace {

int bin_count(double h) {
  const double inv = 1.0 / h;
  const int bins = static_cast<int>(std::lround(inv));
  if (bins < 1 || std::fabs(inv - bins) > 1e-9)
    throw std::invalid_argument("1/h must be a positive integer");
  return bins;
}

}  // namespace

double tuned_bandwidth(int n, const std::optional<PrivacyBudget>& budget) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  double raw = std::pow(static_cast<double>(n), -1.0 / 3.0);
  if (budget) {
    if (budget->kind() == PrivacyBudget::Kind::kApprox)
      throw std::invalid_argument(
          "histogram bandwidth tuning supports Pure and ZCDP budgets only");
    raw = std::max(raw, 1.0 / std::sqrt(n * budget->effective_alpha()));
  }
  if (raw >= 1.0) return 1.0;
  return 1.0 / std::ceil(1.0 / raw);
}

double noise_scale(const std::optional<PrivacyBudget>& budget) {
  if (!budget) return 0.0;
  switch (budget->kind()) {
    case PrivacyBudget::Kind::kPure:
      return 2.0 / budget->epsilon();  // Laplace scale, l1 sensitivity 2
    case PrivacyBudget::Kind::kZCDP:
      return 1.0 / std::sqrt(budget->rho());  // sigma = sqrt(2)/sqrt(2 rho)
    case PrivacyBudget::Kind::kApprox:
      throw std::invalid_argument(
          "histogram noise supports Pure and ZCDP budgets only");
  }
  throw std::logic_error("unreachable");
}

HistogramEstimate fit(const std::vector<double>& data, double h,
                      const std::optional<PrivacyBudget>& budget,
                      RandomStream& stream) {
  const int bins = bin_count(h);
  const int n = static_cast<int>(data.size());
  if (n < 1) throw std::invalid_argument("fit needs a nonempty dataset");
  std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
  for (double x : data) {
    if (x < 0.0 || x > 1.0)
      throw std::invalid_argument("data point outside [0, 1]");
    const int b = std::min(bins - 1, static_cast<int>(x / h));
    counts[static_cast<std::size_t>(b)] += 1.0;
  }
  const double scale = noise_scale(budget);
  if (budget && scale > 0.0) {
    for (double& c : counts) {
      c += budget->kind() == PrivacyBudget::Kind::kPure
               ? stream.laplace(scale)
               : stream.normal(scale);
    }
  }
  const double denom = static_cast<double>(n) * h;
  for (double& c : counts) c /= denom;
  return HistogramEstimate{h, std::move(counts), n, budget};
}

double eval(const HistogramEstimate& estimate, double x) {
  if (x < 0.0 || x > 1.0) throw std::invalid_argument("x outside [0, 1]");
  const int bins = static_cast<int>(estimate.noisy_heights.size());
  const int b = std::min(bins - 1, static_cast<int>(x / estimate.h));
  return estimate.noisy_heights[static_cast<std::size_t>(b)];
}

HistogramEstimate project_to_simplex(const HistogramEstimate& estimate) {
  HistogramEstimate out = estimate;
  double mass = 0.0;
  for (double& v : out.noisy_heights) {
    v = std::max(0.0, v);
    mass += v * out.h;
  }
  if (mass > 0.0)
    for (double& v : out.noisy_heights) v /= mass;
  return out;
}

}  // namespace histogram
}  // namespace dpdens
