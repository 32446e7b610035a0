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

#ifndef DPDENS_RISK_HPP
#define DPDENS_RISK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpdens/bounds.hpp"
#include "dpdens/budget.hpp"
#include "dpdens/densities.hpp"

namespace dpdens {

/// Which estimator to run and how to tune it. When manual_h / manual_N is
/// absent the risk-minimizing rule for the budget is applied at each n.
struct EstimatorConfig {
  enum class Kind { kHistogram, kProjection };
  Kind kind = Kind::kHistogram;
  std::optional<PrivacyBudget> budget;
  std::optional<double> manual_h;  // histogram only
  std::optional<int> manual_N;     // projection only
  int beta = 1;                    // projection tuning smoothness
  /// When set, membership of the test density is checked once per run and a
  /// warning is printed on failure (the run still proceeds).
  std::optional<ClassSpec> target_class;
};

/// Squared-error metric: pointwise at x0, sup over a fixed 4096-point grid,
/// or integrated L2.
struct RiskMetric {
  RiskMetricKind kind = RiskMetricKind::kL2;
  double x0 = 0.5;  // pointwise only
};

struct RiskReport {
  long n = 0;
  std::optional<PrivacyBudget> budget;
  std::string metric;
  double risk_mean = 0.0;
  double risk_stderr = 0.0;
  int reps = 0;
  std::uint64_t seed = 0;
  /// Analytic bound on the reference-coefficient tail ignored by the
  /// Parseval evaluation (projection L2 only, Sobolev target class only).
  double l2_tail_bound = 0.0;
};

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int points_used = 0;
};

struct ConsistencyVerdict {
  double lower_bound = 0.0;     // Omega^2 times the testing difficulty
  double empirical_risk = 0.0;  // worst member L2 risk
  double empirical_stderr = 0.0;
  bool consistent = false;  // lower_bound <= empirical + 4 stderr
};

/// Monte Carlo risk of the configured estimator against the density.
/// Each replication draws n points and fresh noise from a per-replication
/// stream split off master_seed, so results are bit-identical regardless of
/// evaluation order. Requires reps >= 100.
RiskReport mc_risk(const EstimatorConfig& estimator, const Density& density,
                   const RiskMetric& metric, long n, int reps,
                   std::uint64_t master_seed);

/// Ordinary least squares of ln(y) on ln(x). Requires >= 3 positive points.
RateFit fit_rate(const std::vector<std::pair<double, double>>& points);

/// Validity check of the estimation-to-testing reduction: the numeric lower
/// bound (Le Cam for two members, Fano otherwise, classical Fano without a
/// budget) scaled by Omega^2 must not exceed the worst-case measured L2 risk
/// over the packing plus 4 standard errors.
ConsistencyVerdict lower_vs_empirical(const PackingFamily& packing,
                                      const EstimatorConfig& estimator, long n,
                                      const std::optional<PrivacyBudget>& budget,
                                      int reps, std::uint64_t seed);

/// Stable sum independent of accumulation order (pairwise reduction).
double pairwise_sum(const std::vector<double>& values);

std::string metric_name(const RiskMetric& metric);

}  // namespace dpdens

#endif  // DPDENS_RISK_HPP
