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

#include "dpdens/projection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dpdens {
namespace projection {

int tuned_truncation(int n, int beta,
                     const std::optional<PrivacyBudget>& budget) {
  if (n < 1 || beta < 1) throw std::invalid_argument("need n >= 1, beta >= 1");
  double raw = std::pow(static_cast<double>(n), 1.0 / (2.0 * beta + 1.0));
  if (budget) {
    switch (budget->kind()) {
      case PrivacyBudget::Kind::kPure:
        raw = std::min(raw, std::pow(n * budget->epsilon(), 1.0 / (beta + 1.5)));
        break;
      case PrivacyBudget::Kind::kZCDP:
        raw = std::min(raw, std::pow(n * std::sqrt(budget->rho()),
                                     1.0 / (beta + 1.0)));
        break;
      case PrivacyBudget::Kind::kApprox:
        raw = std::min(
            raw, std::pow(n * budget->epsilon() /
                              std::sqrt(std::log(1.25 / budget->delta())),
                          1.0 / (beta + 1.0)));
        break;
    }
  }
  return std::max(1, static_cast<int>(std::lround(raw)));
}

double noise_scale(int N, const std::optional<PrivacyBudget>& budget) {
  if (!budget) return 0.0;
  switch (budget->kind()) {
    case PrivacyBudget::Kind::kPure:
      return 2.0 * std::sqrt(2.0) * N / budget->epsilon();
    case PrivacyBudget::Kind::kZCDP:
      return 2.0 * std::sqrt(static_cast<double>(N)) / std::sqrt(budget->rho());
    case PrivacyBudget::Kind::kApprox:
      return 4.0 * std::sqrt(std::log(1.25 / budget->delta())) *
             std::sqrt(static_cast<double>(N)) / budget->epsilon();
  }
  throw std::logic_error("unreachable");
}

ProjectionEstimate fit(const std::vector<double>& data, int N,
                       const std::optional<PrivacyBudget>& budget,
                       RandomStream& stream) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  const int n = static_cast<int>(data.size());
  if (n < 1) throw std::invalid_argument("fit needs a nonempty dataset");
  std::vector<double> coeffs(static_cast<std::size_t>(N), 0.0);
  for (double x : data) {
    if (x < 0.0 || x > 1.0)
      throw std::invalid_argument("data point outside [0, 1]");
    for (int i = 1; i <= N; ++i)
      coeffs[static_cast<std::size_t>(i - 1)] += fourier_basis(i, x);
  }
  for (double& c : coeffs) c /= n;
  const double scale = noise_scale(N, budget);
  if (budget && scale > 0.0) {
    const bool laplace = budget->kind() == PrivacyBudget::Kind::kPure;
    for (double& c : coeffs)
      c += (laplace ? stream.laplace(scale) : stream.normal(scale)) / n;
  }
  return ProjectionEstimate{std::move(coeffs), n, budget};
}

double eval(const ProjectionEstimate& estimate, double x) {
  double v = 0.0;
  for (std::size_t i = 0; i < estimate.noisy_coefficients.size(); ++i)
    v += estimate.noisy_coefficients[i] *
         fourier_basis(static_cast<int>(i) + 1, x);
  return v;
}

L2Distance l2_distance(const ProjectionEstimate& estimate,
                       const FourierSeries& reference, double sobolev_L,
                       int sobolev_beta) {
  const auto& c = estimate.noisy_coefficients;
  const auto& theta = reference.coefficients();
  if (theta.size() < c.size())
    throw std::invalid_argument("reference order must be >= estimate order");
  double sq = 0.0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const double ci = i < c.size() ? c[i] : 0.0;
    const double d = ci - theta[i];
    sq += d * d;
  }
  L2Distance out{std::sqrt(sq), 0.0};
  if (sobolev_L > 0.0 && sobolev_beta >= 1) {
    // Ellipsoid tail above the reference order N':
    // sum_{j>N'} theta_j^2 <= L^2 / (pi^(2 beta) a_{N'+1}^(2 beta)).
    const int next = static_cast<int>(theta.size()) + 1;
    const double a = next % 2 == 0 ? next : next - 1;
    out.tail_bound = sobolev_L * sobolev_L /
                     std::pow(3.14159265358979323846 * a, 2.0 * sobolev_beta);
  }
  return out;
}

}  // namespace projection
}  // namespace dpdens
