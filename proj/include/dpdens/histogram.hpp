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

#ifndef DPDENS_HISTOGRAM_HPP
#define DPDENS_HISTOGRAM_HPP

#include <optional>
#include <vector>

#include "dpdens/budget.hpp"
#include "dpdens/rng.hpp"

namespace dpdens {

/// A fitted (possibly noisy) histogram density estimate. Heights may be
/// negative when privacy noise is added; they are deliberately not clipped,
/// so the measured risk is that of the raw estimator.
struct HistogramEstimate {
  double h;                          // bin width, 1/h integral
  std::vector<double> noisy_heights; // estimate value on each bin
  int n;                             // sample size
  std::optional<PrivacyBudget> budget;
};

namespace histogram {

/// Risk-minimizing bandwidth: n^(-1/3) without a budget,
/// max(n^(-1/3), (n eps)^(-1/2)) under pure DP,
/// max(n^(-1/3), (n sqrt(rho))^(-1/2)) under zCDP, then rounded to
/// 1/ceil(1/h) and capped at 1. Approx budgets are unsupported.
double tuned_bandwidth(int n, const std::optional<PrivacyBudget>& budget);

/// Laplace scale 2/eps (Pure) or Gaussian sigma 1/sqrt(rho) (ZCDP) for the
/// per-bin count noise; 0 without a budget.
double noise_scale(const std::optional<PrivacyBudget>& budget);

/// Bin counts plus i.i.d. noise, divided by n h. Bins are right-open
/// [k h, (k+1) h) with the last bin closed.
HistogramEstimate fit(const std::vector<double>& data, double h,
                      const std::optional<PrivacyBudget>& budget,
                      RandomStream& stream);

/// Height of the bin containing x.
double eval(const HistogramEstimate& estimate, double x);

/// Optional post-projection onto the simplex of densities (clip at 0 and
/// renormalize). Not used in risk measurements.
HistogramEstimate project_to_simplex(const HistogramEstimate& estimate);

}  // namespace histogram
}  // namespace dpdens

#endif  // DPDENS_HISTOGRAM_HPP
