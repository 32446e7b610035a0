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

#include "dpdens/risk.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>

#include "dpdens/histogram.hpp"
#include "dpdens/projection.hpp"

namespace dpdens {

namespace {

constexpr int kSupGridSize = 4096;
constexpr int kL2Panels = 2048;
constexpr double kPi = 3.14159265358979323846;

double sup_sq_error(const std::vector<double>& est_on_grid,
                    const std::vector<double>& ref_on_grid) {
  double worst = 0.0;
  for (std::size_t i = 0; i < est_on_grid.size(); ++i) {
    const double d = est_on_grid[i] - ref_on_grid[i];
    worst = std::max(worst, d * d);
  }
  return worst;
}

}  // namespace

double pairwise_sum(const std::vector<double>& values) {
  // Recursive halving keeps the reduction tree fixed regardless of how the
  // terms were produced, so worker count cannot change the result.
  std::vector<double> buf = values;
  std::size_t len = buf.size();
  while (len > 1) {
    const std::size_t half = len / 2;
    for (std::size_t i = 0; i < half; ++i) buf[i] += buf[len - 1 - i];
    len = len - half;
  }
  return buf.empty() ? 0.0 : buf[0];
}

std::string metric_name(const RiskMetric& metric) {
  switch (metric.kind) {
    case RiskMetricKind::kPointwise:
      return "pointwise@" + std::to_string(metric.x0);
    case RiskMetricKind::kSup:
      return "sup-grid";
    case RiskMetricKind::kL2:
      return "L2";
  }
  return "";
}

RiskReport mc_risk(const EstimatorConfig& estimator, const Density& density,
                   const RiskMetric& metric, long n, int reps,
                   std::uint64_t master_seed) {
  if (reps < 100) throw std::invalid_argument("mc_risk requires reps >= 100");
  if (n < 1) throw std::invalid_argument("mc_risk requires n >= 1");
  if (estimator.target_class) {
    const MembershipReport mem =
        check_membership(density, *estimator.target_class);
    if (!mem.member)
      std::cerr << "warning: test density fails target-class membership ("
                << mem.note << ")\n";
  }

  const bool is_hist = estimator.kind == EstimatorConfig::Kind::kHistogram;
  double h = 0.0;
  int N = 0;
  if (is_hist) {
    if (estimator.manual_N)
      throw std::invalid_argument("manual_N is a projection setting");
    h = estimator.manual_h
            ? *estimator.manual_h
            : histogram::tuned_bandwidth(static_cast<int>(n), estimator.budget);
  } else {
    if (estimator.manual_h)
      throw std::invalid_argument("manual_h is a histogram setting");
    N = estimator.manual_N ? *estimator.manual_N
                           : projection::tuned_truncation(
                                 static_cast<int>(n), estimator.beta,
                                 estimator.budget);
  }

  RiskReport report;
  report.n = n;
  report.budget = estimator.budget;
  report.metric = metric_name(metric);
  report.reps = reps;
  report.seed = master_seed;

  // Per-metric reference data, computed once.
  std::vector<double> ref_grid;
  std::optional<FourierSeries> ref_coeffs;
  if (metric.kind == RiskMetricKind::kSup) {
    ref_grid.resize(kSupGridSize);
    for (int i = 0; i < kSupGridSize; ++i) {
      const double x = static_cast<double>(i) / (kSupGridSize - 1);
      ref_grid[static_cast<std::size_t>(i)] = density(x);
    }
  } else if (metric.kind == RiskMetricKind::kL2 && !is_hist) {
    const int ref_order = std::max(4 * N, 64);
    ref_coeffs.emplace(fourier_coefficients(density, ref_order));
    if (estimator.target_class &&
        estimator.target_class->kind == ClassSpec::Kind::kPeriodicSobolev) {
      const int next = ref_order + 1;
      const double a = next % 2 == 0 ? next : next - 1;
      const double L = estimator.target_class->L;
      report.l2_tail_bound =
          L * L / std::pow(kPi * a, 2.0 * estimator.target_class->beta);
    }
  }
  if (metric.kind == RiskMetricKind::kPointwise &&
      (metric.x0 < 0.0 || metric.x0 > 1.0))
    throw std::invalid_argument("pointwise x0 outside [0, 1]");

  RandomStream master(master_seed);
  std::vector<double> losses(static_cast<std::size_t>(reps), 0.0);
  for (int r = 0; r < reps; ++r) {
    RandomStream stream = master.split(static_cast<std::uint64_t>(r));
    const std::vector<double> data =
        density.sample(static_cast<int>(n), stream);
    double loss = 0.0;
    if (is_hist) {
      const HistogramEstimate est =
          histogram::fit(data, h, estimator.budget, stream);
      switch (metric.kind) {
        case RiskMetricKind::kPointwise: {
          const double d = histogram::eval(est, metric.x0) - density(metric.x0);
          loss = d * d;
          break;
        }
        case RiskMetricKind::kSup: {
          std::vector<double> est_grid(kSupGridSize);
          for (int i = 0; i < kSupGridSize; ++i) {
            const double x = static_cast<double>(i) / (kSupGridSize - 1);
            est_grid[static_cast<std::size_t>(i)] = histogram::eval(est, x);
          }
          loss = sup_sq_error(est_grid, ref_grid);
          break;
        }
        case RiskMetricKind::kL2: {
          // Fixed 2048-panel composite Simpson over [0, 1].
          double v = 0.0;
          for (int p = 0; p < kL2Panels; ++p) {
            const double a = static_cast<double>(p) / kL2Panels;
            const double b = static_cast<double>(p + 1) / kL2Panels;
            const double mid = 0.5 * (a + b);
            auto g = [&](double x) {
              const double d = histogram::eval(est, x) - density(x);
              return d * d;
            };
            v += (b - a) / 6.0 * (g(a) + 4.0 * g(mid) + g(b));
          }
          loss = v;
          break;
        }
      }
    } else {
      const ProjectionEstimate est =
          projection::fit(data, N, estimator.budget, stream);
      switch (metric.kind) {
        case RiskMetricKind::kPointwise: {
          const double d = projection::eval(est, metric.x0) - density(metric.x0);
          loss = d * d;
          break;
        }
        case RiskMetricKind::kSup: {
          std::vector<double> est_grid(kSupGridSize);
          for (int i = 0; i < kSupGridSize; ++i) {
            const double x = static_cast<double>(i) / (kSupGridSize - 1);
            est_grid[static_cast<std::size_t>(i)] = projection::eval(est, x);
          }
          loss = sup_sq_error(est_grid, ref_grid);
          break;
        }
        case RiskMetricKind::kL2: {
          // Parseval: coefficient-space distance against the reference
          // expansion, orders above the reference covered by l2_tail_bound.
          const auto& theta = ref_coeffs->coefficients();
          const auto& c = est.noisy_coefficients;
          double sq = 0.0;
          for (std::size_t i = 0; i < theta.size(); ++i) {
            const double ci = i < c.size() ? c[i] : 0.0;
            const double d = ci - theta[i];
            sq += d * d;
          }
          loss = sq;
          break;
        }
      }
    }
    losses[static_cast<std::size_t>(r)] = loss;
  }

  const double mean = pairwise_sum(losses) / reps;
  std::vector<double> sq_dev(losses.size());
  for (std::size_t i = 0; i < losses.size(); ++i) {
    const double d = losses[i] - mean;
    sq_dev[i] = d * d;
  }
  const double var = reps > 1 ? pairwise_sum(sq_dev) / (reps - 1) : 0.0;
  report.risk_mean = mean;
  report.risk_stderr = std::sqrt(var / reps);
  return report;
}

RateFit fit_rate(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3)
    throw std::invalid_argument("fit_rate needs at least 3 points");
  const std::size_t k = points.size();
  double sx = 0.0, sy = 0.0;
  std::vector<double> lx(k), ly(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (points[i].first <= 0.0 || points[i].second <= 0.0)
      throw std::domain_error("fit_rate needs positive coordinates");
    lx[i] = std::log(points[i].first);
    ly[i] = std::log(points[i].second);
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / k, my = sy / k;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx <= 0.0) throw std::domain_error("fit_rate needs distinct x values");
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0)
                            : 1.0;
  fit.points_used = static_cast<int>(k);
  return fit;
}

ConsistencyVerdict lower_vs_empirical(
    const PackingFamily& packing, const EstimatorConfig& estimator, long n,
    const std::optional<PrivacyBudget>& budget, int reps, std::uint64_t seed) {
  const std::size_t M = packing.members.size();
  EstimatorConfig config = estimator;
  config.budget = budget;

  double difficulty;
  if (M == 2) {
    difficulty =
        lecam_bound(tv(*packing.members[0], *packing.members[1]), n, budget);
  } else if (budget && (budget->kind() == PrivacyBudget::Kind::kPure ||
                        budget->kind() == PrivacyBudget::Kind::kZCDP)) {
    std::vector<std::vector<double>> pairwise_tv(M, std::vector<double>(M));
    for (std::size_t i = 0; i < M; ++i)
      for (std::size_t j = i + 1; j < M; ++j)
        pairwise_tv[i][j] = pairwise_tv[j][i] =
            tv(*packing.members[i], *packing.members[j]);
    difficulty =
        fano_bound(pairwise_tv, static_cast<int>(M), n, *budget);
  } else {
    difficulty =
        fano_bound_classical(mean_kl_to_mixture(packing),
                             static_cast<int>(M), n);
  }

  ConsistencyVerdict verdict;
  verdict.lower_bound = packing.omega * packing.omega * difficulty;
  const RiskMetric metric{RiskMetricKind::kL2, 0.5};
  for (std::size_t i = 0; i < M; ++i) {
    const RiskReport report =
        mc_risk(config, *packing.members[i], metric, n, reps,
                seed + static_cast<std::uint64_t>(i));
    if (report.risk_mean >= verdict.empirical_risk) {
      verdict.empirical_risk = report.risk_mean;
      verdict.empirical_stderr = report.risk_stderr;
    }
  }
  verdict.consistent = verdict.lower_bound <=
                       verdict.empirical_risk + 4.0 * verdict.empirical_stderr;
  return verdict;
}

}  // namespace dpdens
