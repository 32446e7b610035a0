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

// dpdens command-line runner.
//
// Subcommands:
//   estimate       fit a (possibly private) density estimate to a data file
//   risk-sweep     Monte Carlo risk over an n-grid or a budget grid
//   rate-fit       least-squares slope of a risk CSV on log-log axes
//   bounds         evaluate packing lower bounds over an n-grid
//   verify-packing check the packing inequality grid; exit 2 on violation
//
// Exit codes: 0 success, 1 usage or config error, 2 verification failure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dpdens/bounds.hpp"
#include "dpdens/budget.hpp"
#include "dpdens/densities.hpp"
#include "dpdens/histogram.hpp"
#include "dpdens/io.hpp"
#include "dpdens/projection.hpp"
#include "dpdens/risk.hpp"
#include "dpdens/rng.hpp"

namespace {

using dpdens::PrivacyBudget;

using Config = std::map<std::string, std::string>;

std::optional<PrivacyBudget> budget_from_config(const Config& cfg) {
  const std::string kind =
      dpdens::io::config_has(cfg, "budget")
          ? dpdens::io::config_string(cfg, "budget")
          : "none";
  if (kind == "none") return std::nullopt;
  if (kind == "pure")
    return PrivacyBudget::Pure(dpdens::io::config_double(cfg, "eps"));
  if (kind == "zcdp")
    return PrivacyBudget::ZCDP(dpdens::io::config_double(cfg, "rho"));
  if (kind == "approx")
    return PrivacyBudget::Approx(dpdens::io::config_double(cfg, "eps"),
                                 dpdens::io::config_double(cfg, "delta"));
  throw std::runtime_error("budget must be none|pure|zcdp|approx");
}

std::vector<int> omega_from_config(const Config& cfg, int m) {
  if (!dpdens::io::config_has(cfg, "omega")) return std::vector<int>(m, 1);
  std::vector<int> omega;
  for (double v : dpdens::io::config_list(cfg, "omega"))
    omega.push_back(v != 0.0 ? 1 : 0);
  if (static_cast<int>(omega.size()) != m)
    throw std::runtime_error("omega length must equal m");
  return omega;
}

std::shared_ptr<const dpdens::Density> density_from_config(const Config& cfg) {
  const std::string name = dpdens::io::config_string(cfg, "density");
  if (name == "uniform") return std::make_shared<dpdens::UniformDensity>();
  const double L = dpdens::io::config_double(cfg, "L");
  const double h = dpdens::io::config_double(cfg, "density_h");
  if (name == "triangle") {
    const double x0 = dpdens::io::config_has(cfg, "x0_peak")
                          ? dpdens::io::config_double(cfg, "x0_peak")
                          : 0.5;
    return std::make_shared<dpdens::PiecewiseLinearDensity>(
        dpdens::make_triangle(L, x0, h));
  }
  const int m = static_cast<int>(dpdens::io::config_long(cfg, "m"));
  const std::vector<int> omega = omega_from_config(cfg, m);
  if (name == "saw")
    return std::make_shared<dpdens::PiecewiseLinearDensity>(
        dpdens::make_saw(L, m, omega, h));
  if (name == "bump") {
    const int beta = static_cast<int>(dpdens::io::config_long(cfg, "beta"));
    return std::make_shared<dpdens::SmoothBumpPacking>(
        dpdens::make_bump_packing(L, beta, m, omega, h));
  }
  throw std::runtime_error("density must be uniform|triangle|saw|bump");
}

dpdens::EstimatorConfig estimator_from_config(const Config& cfg) {
  dpdens::EstimatorConfig est;
  const std::string kind = dpdens::io::config_string(cfg, "estimator");
  if (kind == "histogram") {
    est.kind = dpdens::EstimatorConfig::Kind::kHistogram;
  } else if (kind == "projection") {
    est.kind = dpdens::EstimatorConfig::Kind::kProjection;
  } else {
    throw std::runtime_error("estimator must be histogram|projection");
  }
  est.budget = budget_from_config(cfg);
  if (dpdens::io::config_has(cfg, "manual_h"))
    est.manual_h = dpdens::io::config_double(cfg, "manual_h");
  if (dpdens::io::config_has(cfg, "manual_N"))
    est.manual_N = static_cast<int>(dpdens::io::config_long(cfg, "manual_N"));
  if (dpdens::io::config_has(cfg, "beta"))
    est.beta = static_cast<int>(dpdens::io::config_long(cfg, "beta"));
  return est;
}

dpdens::RiskMetric metric_from_config(const Config& cfg) {
  dpdens::RiskMetric metric;
  const std::string name = dpdens::io::config_has(cfg, "metric")
                               ? dpdens::io::config_string(cfg, "metric")
                               : "L2";
  if (name == "L2") {
    metric.kind = dpdens::RiskMetricKind::kL2;
  } else if (name == "sup") {
    metric.kind = dpdens::RiskMetricKind::kSup;
  } else if (name == "pointwise") {
    metric.kind = dpdens::RiskMetricKind::kPointwise;
    metric.x0 = dpdens::io::config_double(cfg, "x0");
  } else {
    throw std::runtime_error("metric must be L2|sup|pointwise");
  }
  return metric;
}

std::ostream& output_stream(const std::string& out, std::ofstream& file) {
  if (out.empty()) return std::cout;
  file.open(out);
  if (!file) throw std::runtime_error("cannot open " + out + " for writing");
  return file;
}

void echo_config(std::ostream& os, const Config& cfg, std::uint64_t seed) {
  os << "# seed = " << seed << "\n";
  for (const auto& [k, v] : cfg) os << "# " << k << " = " << v << "\n";
}

int cmd_estimate(const std::string& data_path, const std::string& estimator,
                 const std::string& budget_kind, double eps, double rho,
                 double delta, double manual_h, int manual_N, int beta,
                 std::uint64_t seed, const std::string& out_prefix) {
  std::optional<PrivacyBudget> budget;
  if (budget_kind == "pure") {
    budget = PrivacyBudget::Pure(eps);
  } else if (budget_kind == "zcdp") {
    budget = PrivacyBudget::ZCDP(rho);
  } else if (budget_kind == "approx") {
    budget = PrivacyBudget::Approx(eps, delta);
  } else if (budget_kind != "none") {
    std::cerr << "error: --budget must be none|pure|zcdp|approx\n";
    return 1;
  }
  const std::vector<double> data = dpdens::io::read_dataset(data_path);
  if (data.empty()) {
    std::cerr << "error: " << data_path << " holds no data\n";
    return 1;
  }
  dpdens::RandomStream stream(seed);
  const int n = static_cast<int>(data.size());

  std::vector<std::pair<double, double>> curve;
  std::ostringstream estimate_csv;
  estimate_csv.precision(17);
  if (estimator == "histogram") {
    const double h =
        manual_h > 0.0 ? manual_h : dpdens::histogram::tuned_bandwidth(n, budget);
    const dpdens::HistogramEstimate est =
        dpdens::histogram::fit(data, h, budget, stream);
    std::cout << "h = " << h
              << "\nnoise_scale = " << dpdens::histogram::noise_scale(budget)
              << "\n";
    estimate_csv << "bin,height\n";
    for (std::size_t b = 0; b < est.noisy_heights.size(); ++b)
      estimate_csv << b << "," << est.noisy_heights[b] << "\n";
    for (int i = 0; i <= 512; ++i) {
      const double x = i / 512.0;
      curve.emplace_back(x, dpdens::histogram::eval(est, x));
    }
  } else if (estimator == "projection") {
    const int N = manual_N > 0
                      ? manual_N
                      : dpdens::projection::tuned_truncation(n, beta, budget);
    const dpdens::ProjectionEstimate est =
        dpdens::projection::fit(data, N, budget, stream);
    std::cout << "N = " << N << "\nnoise_scale = "
              << dpdens::projection::noise_scale(N, budget) << "\n";
    estimate_csv << "index,coefficient\n";
    for (std::size_t i = 0; i < est.noisy_coefficients.size(); ++i)
      estimate_csv << i + 1 << "," << est.noisy_coefficients[i] << "\n";
    for (int i = 0; i <= 512; ++i) {
      const double x = i / 512.0;
      curve.emplace_back(x, dpdens::projection::eval(est, x));
    }
  } else {
    std::cerr << "error: --estimator must be histogram|projection\n";
    return 1;
  }
  std::ofstream csv(out_prefix + ".csv");
  if (!csv) {
    std::cerr << "error: cannot write " << out_prefix << ".csv\n";
    return 1;
  }
  csv << estimate_csv.str();
  dpdens::io::write_svg_plot(out_prefix + ".svg", {curve}, "density estimate");
  std::cout << "wrote " << out_prefix << ".csv and " << out_prefix << ".svg\n";
  return 0;
}

int cmd_risk_sweep(const std::string& config_path, std::uint64_t seed,
                   const std::string& out) {
  static const std::vector<std::string> kAllowed = {
      "estimator", "metric",   "x0",     "density", "L",
      "density_h", "x0_peak",  "m",      "omega",   "beta",
      "budget",    "eps",      "rho",    "delta",   "eps_grid",
      "rho_grid",  "n",        "n_grid", "reps",    "manual_h",
      "manual_N"};
  const Config cfg = dpdens::io::read_config(config_path, kAllowed);
  const auto density = density_from_config(cfg);
  const dpdens::RiskMetric metric = metric_from_config(cfg);
  const int reps = static_cast<int>(dpdens::io::config_long(cfg, "reps"));

  std::ofstream file;
  std::ostream& os = output_stream(out, file);
  echo_config(os, cfg, seed);
  os << dpdens::io::risk_csv_header() << "\n";

  const bool eps_sweep = dpdens::io::config_has(cfg, "eps_grid");
  const bool rho_sweep = dpdens::io::config_has(cfg, "rho_grid");
  if (eps_sweep || rho_sweep) {
    const long n = dpdens::io::config_long(cfg, "n");
    const std::vector<double> grid =
        dpdens::io::config_list(cfg, eps_sweep ? "eps_grid" : "rho_grid");
    for (double v : grid) {
      Config point = cfg;
      point["budget"] = eps_sweep ? "pure" : "zcdp";
      point[eps_sweep ? "eps" : "rho"] = std::to_string(v);
      dpdens::EstimatorConfig est = estimator_from_config(point);
      est.budget = eps_sweep ? PrivacyBudget::Pure(v) : PrivacyBudget::ZCDP(v);
      const dpdens::RiskReport report =
          dpdens::mc_risk(est, *density, metric, n, reps, seed);
      os << dpdens::io::risk_csv_row(report) << "\n";
    }
  } else {
    const dpdens::EstimatorConfig est = estimator_from_config(cfg);
    for (double nv : dpdens::io::config_list(cfg, "n_grid")) {
      const long n = static_cast<long>(std::lround(nv));
      const dpdens::RiskReport report =
          dpdens::mc_risk(est, *density, metric, n, reps, seed);
      os << dpdens::io::risk_csv_row(report) << "\n";
    }
  }
  return 0;
}

int cmd_rate_fit(const std::string& csv_path, const std::string& x_axis) {
  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("cannot open " + csv_path);
  std::vector<std::pair<double, double>> points;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("metric,", 0) == 0)
      continue;
    std::istringstream row(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() < 6)
      throw std::runtime_error("malformed risk CSV row: " + line);
    const double n = std::stod(fields[1]);
    const double budget_value = std::stod(fields[3]);
    const double risk = std::stod(fields[4]);
    double x = n;
    if (x_axis == "nalpha") {
      const std::string kind = fields[2];
      x = kind == "zcdp" ? n * std::sqrt(budget_value) : n * budget_value;
    }
    points.emplace_back(x, risk);
  }
  const dpdens::RateFit fit = dpdens::fit_rate(points);
  std::cout.precision(10);
  std::cout << "slope = " << fit.slope << "\nintercept = " << fit.intercept
            << "\nr_squared = " << fit.r_squared
            << "\npoints = " << fit.points_used << "\n";
  return 0;
}

int cmd_bounds(const std::string& config_path, std::uint64_t seed,
               const std::string& out) {
  static const std::vector<std::string> kAllowed = {
      "kind", "family", "L",      "h",   "m",     "beta",
      "tau",  "n_grid", "budget", "eps", "rho",   "delta"};
  const Config cfg = dpdens::io::read_config(config_path, kAllowed);
  const std::string kind = dpdens::io::config_string(cfg, "kind");
  const double L = dpdens::io::config_double(cfg, "L");
  const double h = dpdens::io::config_double(cfg, "h");
  const std::optional<PrivacyBudget> budget = budget_from_config(cfg);
  const std::string budget_name =
      budget ? budget->describe() : std::string("none");

  std::ofstream file;
  std::ostream& os = output_stream(out, file);
  echo_config(os, cfg, seed);
  os << dpdens::io::bound_csv_header() << "\n";

  for (double nv : dpdens::io::config_list(cfg, "n_grid")) {
    const long n = static_cast<long>(std::lround(nv));
    dpdens::BoundReport report;
    report.h = h;
    report.L = L;
    report.n = n;
    report.budget = budget_name;
    report.m = dpdens::io::config_has(cfg, "m")
                   ? static_cast<int>(dpdens::io::config_long(cfg, "m"))
                   : 0;
    report.beta = dpdens::io::config_has(cfg, "beta")
                      ? static_cast<int>(dpdens::io::config_long(cfg, "beta"))
                      : 0;
    if (kind == "lecam") {
      // Two-point packing: uniform vs centered triangle.
      auto uniform = std::make_shared<dpdens::UniformDensity>();
      auto triangle = std::make_shared<dpdens::PiecewiseLinearDensity>(
          dpdens::make_triangle(L, 0.5, h));
      const dpdens::PackingFamily packing =
          dpdens::make_packing({uniform, triangle});
      const double difficulty =
          dpdens::lecam_bound(dpdens::tv(*uniform, *triangle), n, budget);
      report.kind = "lecam";
      report.value = packing.omega * packing.omega * difficulty;
    } else if (kind == "fano") {
      if (!budget) throw std::runtime_error("fano needs a pure or zcdp budget");
      const int m = static_cast<int>(dpdens::io::config_long(cfg, "m"));
      dpdens::RandomStream stream(seed);
      const dpdens::CodeSet code = dpdens::varshamov_gilbert(m, stream);
      const std::string family = dpdens::io::config_string(cfg, "family");
      std::vector<std::shared_ptr<const dpdens::Density>> members;
      for (const auto& word : code.words) {
        // The all-zero word indexes the flat baseline, which is uniform.
        if (std::count(word.begin(), word.end(), 1) == 0) {
          members.push_back(std::make_shared<dpdens::UniformDensity>());
          continue;
        }
        if (family == "saw") {
          members.push_back(std::make_shared<dpdens::PiecewiseLinearDensity>(
              dpdens::make_saw(L, m, word, h)));
        } else if (family == "bump") {
          const int beta =
              static_cast<int>(dpdens::io::config_long(cfg, "beta"));
          members.push_back(std::make_shared<dpdens::SmoothBumpPacking>(
              dpdens::make_bump_packing(L, beta, m, word, h)));
        } else {
          throw std::runtime_error("fano family must be saw|bump");
        }
      }
      // The all-zero word gives the flat baseline; it is a valid member.
      const dpdens::PackingFamily packing =
          dpdens::make_packing(std::move(members));
      const int M = static_cast<int>(packing.members.size());
      std::vector<std::vector<double>> pairwise_tv(
          M, std::vector<double>(M, 0.0));
      for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j)
          pairwise_tv[i][j] = pairwise_tv[j][i] =
              dpdens::tv(*packing.members[i], *packing.members[j]);
      const double difficulty =
          dpdens::fano_bound(pairwise_tv, M, n, *budget);
      report.kind = "fano";
      report.value = packing.omega * packing.omega * difficulty;
    } else if (kind == "assouad") {
      if (!budget || budget->kind() != PrivacyBudget::Kind::kZCDP)
        throw std::runtime_error("assouad needs a zcdp budget");
      const int m = static_cast<int>(dpdens::io::config_long(cfg, "m"));
      const std::string family = dpdens::io::config_string(cfg, "family");
      double tau, coord_tv;
      if (family == "saw") {
        // Analytic per-coordinate quantities for the saw hypercube.
        tau = 2.0 / 3.0 * L * L * h * h * h * (1.0 - 3.0 * m * h);
        coord_tv = L * h * h;
      } else if (family == "bump") {
        const int beta = static_cast<int>(dpdens::io::config_long(cfg, "beta"));
        const dpdens::SmoothBumpPacking probe = dpdens::make_bump_packing(
            L, beta, m, std::vector<int>(m, 1), h);
        tau = L * L * std::pow(h, 2.0 * beta + 1.0) *
              (probe.kernel_sq_integral() -
               2.0 * m * h * probe.kernel_integral() *
                   probe.kernel_integral());
        coord_tv = L * std::pow(h, beta + 1.0) * probe.kernel_integral();
      } else {
        throw std::runtime_error("assouad family must be saw|bump");
      }
      if (dpdens::io::config_has(cfg, "tau"))
        tau = dpdens::io::config_double(cfg, "tau");
      report.kind = "assouad";
      report.value = dpdens::assouad_bound(
          tau, m, std::vector<double>(m, coord_tv), n, budget->rho());
    } else {
      throw std::runtime_error("kind must be lecam|fano|assouad");
    }
    os << dpdens::io::bound_csv_row(report) << "\n";
  }
  return 0;
}

struct PackingCheck {
  std::string label;
  double lhs;
  double rhs;
  bool upper;  // lhs <= rhs expected when true, lhs >= rhs otherwise
  bool pass() const {
    return upper ? lhs <= rhs + 1e-8 : lhs + 1e-8 >= rhs;
  }
};

int cmd_verify_packing(const std::string& config_path) {
  std::vector<double> L_grid = {0.5, 1.0, 2.0};
  std::vector<double> h_grid = {0.02, 0.04, 0.06};
  std::vector<double> m_grid = {2, 3, 4, 6};
  int beta = 1;
  if (!config_path.empty()) {
    static const std::vector<std::string> kAllowed = {"L_grid", "h_grid",
                                                      "m_grid", "beta"};
    const Config cfg = dpdens::io::read_config(config_path, kAllowed);
    if (dpdens::io::config_has(cfg, "L_grid"))
      L_grid = dpdens::io::config_list(cfg, "L_grid");
    if (dpdens::io::config_has(cfg, "h_grid"))
      h_grid = dpdens::io::config_list(cfg, "h_grid");
    if (dpdens::io::config_has(cfg, "m_grid"))
      m_grid = dpdens::io::config_list(cfg, "m_grid");
    if (dpdens::io::config_has(cfg, "beta"))
      beta = static_cast<int>(dpdens::io::config_long(cfg, "beta"));
  }

  const dpdens::UniformDensity uniform;
  bool all_pass = true;
  std::cout << "check,L,h,m,lhs,rhs,verdict\n";
  for (double L : L_grid)
    for (double h : h_grid)
      for (double mv : m_grid) {
        const int m = static_cast<int>(std::lround(mv));
        const std::vector<int> ones(m, 1);
        std::vector<int> alternating(m, 0);
        for (int i = 0; i < m; i += 2) alternating[i] = 1;
        const int ham = dpdens::hamming(ones, alternating);

        std::vector<PackingCheck> checks;
        if (h <= 1.0 / (2.0 * (m + 1)) && m * L * h * h < 1.0) {
          const dpdens::PiecewiseLinearDensity saw_ones =
              dpdens::make_saw(L, m, ones, h);
          const dpdens::PiecewiseLinearDensity saw_alt =
              dpdens::make_saw(L, m, alternating, h);
          checks.push_back({"saw-tv", dpdens::tv(uniform, saw_ones),
                            m * L * h * h, true});
          checks.push_back(
              {"saw-kl", dpdens::kl(uniform, saw_ones),
               L * L / 3.0 * m * h * h * h * (2.0 - 3.0 * m * h), true});
          checks.push_back({"saw-l2", dpdens::l2_sq(saw_ones, saw_alt),
                            2.0 / 3.0 * ham * L * L * h * h * h *
                                (1.0 - 3.0 * m * h),
                            false});
        }
        if (h < 1.0 / (m + 1)) {
          const dpdens::SmoothBumpPacking bump_ones =
              dpdens::make_bump_packing(L, beta, m, ones, h);
          const dpdens::SmoothBumpPacking bump_alt =
              dpdens::make_bump_packing(L, beta, m, alternating, h);
          const double intk = bump_ones.kernel_integral();
          const double intk2 = bump_ones.kernel_sq_integral();
          const double h_pow = std::pow(h, 2.0 * beta + 1.0);
          checks.push_back({"bump-kl", dpdens::kl(bump_ones, uniform),
                            m * L * L * h_pow * intk2, true});
          checks.push_back({"bump-l2", dpdens::l2_sq(bump_ones, bump_alt),
                            ham * L * L * h_pow *
                                (intk2 - 2.0 * m * h * intk * intk),
                            false});
        }
        for (const PackingCheck& check : checks) {
          const bool ok = check.pass();
          all_pass = all_pass && ok;
          std::cout.precision(12);
          std::cout << check.label << "," << L << "," << h << "," << m << ","
                    << check.lhs << "," << check.rhs << ","
                    << (ok ? "pass" : "FAIL") << "\n";
        }
      }
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"density estimation under differential privacy"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  int workers = 1;
  app.add_option("--seed", seed, "master random seed");
  app.add_option("--workers", workers,
                 "worker hint; outputs do not depend on it");
  // Let --seed and --workers appear after subcommand options as well.
  app.fallthrough();

  auto* estimate = app.add_subcommand("estimate", "fit one estimate");
  std::string data_path, estimator = "histogram", budget_kind = "none";
  std::string out_prefix = "estimate";
  double eps = 1.0, rho = 1.0, delta = 1e-6, manual_h = 0.0;
  int manual_N = 0, beta = 1;
  estimate->add_option("--data", data_path)->required();
  estimate->add_option("--estimator", estimator);
  estimate->add_option("--budget", budget_kind);
  estimate->add_option("--eps", eps);
  estimate->add_option("--rho", rho);
  estimate->add_option("--delta", delta);
  estimate->add_option("--bandwidth", manual_h, "histogram bin width 1/k");
  estimate->add_option("--truncation", manual_N, "projection order N");
  estimate->add_option("--beta", beta);
  estimate->add_option("--out", out_prefix);

  auto* sweep = app.add_subcommand("risk-sweep", "Monte Carlo risk sweep");
  std::string sweep_config, sweep_out;
  sweep->add_option("--config", sweep_config)->required();
  sweep->add_option("--out", sweep_out);

  auto* ratefit = app.add_subcommand("rate-fit", "log-log slope of a risk CSV");
  std::string fit_csv, fit_x = "n";
  ratefit->add_option("--csv", fit_csv)->required();
  ratefit->add_option("--x", fit_x, "n or nalpha");

  auto* bounds = app.add_subcommand("bounds", "evaluate lower bounds");
  std::string bounds_config, bounds_out;
  bounds->add_option("--config", bounds_config)->required();
  bounds->add_option("--out", bounds_out);

  auto* verify = app.add_subcommand("verify-packing",
                                    "check the packing inequality grid");
  std::string verify_config;
  verify->add_option("--config", verify_config);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*estimate)
      return cmd_estimate(data_path, estimator, budget_kind, eps, rho, delta,
                          manual_h, manual_N, beta, seed, out_prefix);
    if (*sweep) return cmd_risk_sweep(sweep_config, seed, sweep_out);
    if (*ratefit) return cmd_rate_fit(fit_csv, fit_x);
    if (*bounds) return cmd_bounds(bounds_config, seed, bounds_out);
    if (*verify) return cmd_verify_packing(verify_config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
