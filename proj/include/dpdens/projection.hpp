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

#ifndef DPDENS_PROJECTION_HPP
#define DPDENS_PROJECTION_HPP

#include <optional>
#include <vector>

#include "dpdens/budget.hpp"
#include "dpdens/densities.hpp"
#include "dpdens/rng.hpp"

namespace dpdens {

/// A fitted (possibly noisy) Fourier projection estimate: released
/// coefficients theta_hat_i + Z_i / n for i = 1..N.
struct ProjectionEstimate {
  std::vector<double> noisy_coefficients;
  int n;
  std::optional<PrivacyBudget> budget;
};

/// Coefficient-space L2 distance together with the analytic bound on the
/// reference tail that was ignored above the reference order.
struct L2Distance {
  double distance;
  double tail_bound;
};

namespace projection {

/// Risk-minimizing truncation order: n^(1/(2 beta + 1)) without a budget,
/// capped by (n eps)^(1/(beta + 3/2)) (Pure), (n sqrt(rho))^(1/(beta + 1))
/// (ZCDP) or (n eps / sqrt(ln(1.25/delta)))^(1/(beta + 1)) (Approx); rounded
/// to the nearest integer >= 1.
int tuned_truncation(int n, int beta,
                     const std::optional<PrivacyBudget>& budget);

/// Per-coefficient noise scale: Laplace 2 sqrt(2) N / eps (Pure), Gaussian
/// 2 sqrt(N) / sqrt(rho) (ZCDP), Gaussian 4 sqrt(ln(1.25/delta)) sqrt(N) / eps
/// (Approx); 0 without a budget.
double noise_scale(int N, const std::optional<PrivacyBudget>& budget);

ProjectionEstimate fit(const std::vector<double>& data, int N,
                       const std::optional<PrivacyBudget>& budget,
                       RandomStream& stream);

/// Density value sum_i c_i phi_i(x).
double eval(const ProjectionEstimate& estimate, double x);

/// sqrt(sum_{i<=N} (c_i - theta_i)^2 + sum_{N<i<=N'} theta_i^2) against a
/// reference with coefficients to order N' >= N. The tail above N' is
/// bounded through the Sobolev ellipsoid of the given class when provided.
L2Distance l2_distance(const ProjectionEstimate& estimate,
                       const FourierSeries& reference,
                       double sobolev_L = 0.0, int sobolev_beta = 0);

}  // namespace projection
}  // namespace dpdens

#endif  // DPDENS_PROJECTION_HPP
