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

#include "dpdens/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "dpdens/quadrature.hpp"

namespace dpdens {

namespace {

const PiecewiseLinearDensity* as_pwl(const Density& d) {
  return dynamic_cast<const PiecewiseLinearDensity*>(&d);
}

// Merged breakpoints of two piecewise-linear densities (uniform counts as
// having none beyond the endpoints).
std::vector<double> merged_grid(const Density& p, const Density& q) {
  std::set<double> pts{0.0, 1.0};
  if (const auto* a = as_pwl(p))
    pts.insert(a->breakpoints().begin(), a->breakpoints().end());
  if (const auto* b = as_pwl(q))
    pts.insert(b->breakpoints().begin(), b->breakpoints().end());
  return {pts.begin(), pts.end()};
}

bool piecewise_exact_pair(const Density& p, const Density& q) {
  auto linearish = [](const Density& d) {
    return as_pwl(d) != nullptr || dynamic_cast<const UniformDensity*>(&d);
  };
  return linearish(p) && linearish(q);
}

}  // namespace

double tv(const Density& p, const Density& q) {
  if (piecewise_exact_pair(p, q)) {
    const auto grid = merged_grid(p, q);
    double integral = 0.0;
    for (std::size_t s = 1; s < grid.size(); ++s) {
      const double x0 = grid[s - 1], x1 = grid[s];
      const double d0 = p(x0) - q(x0), d1 = p(x1) - q(x1);
      const double len = x1 - x0;
      if (d0 * d1 >= 0.0) {
        integral += 0.5 * (std::fabs(d0) + std::fabs(d1)) * len;
      } else {
        const double xc = len * d0 / (d0 - d1);  // crossing offset
        integral += 0.5 * (std::fabs(d0) * xc + std::fabs(d1) * (len - xc));
      }
    }
    return 0.5 * integral;
  }
  return 0.5 * integrate([&](double x) { return std::fabs(p(x) - q(x)); }, 0.0,
                         1.0, 1e-9);
}

double kl(const Density& p, const Density& q) {
  auto integrand = [&](double x) {
    const double px = p(x);
    if (px <= 0.0) return 0.0;
    const double qx = q(x);
    if (qx <= 0.0)
      throw std::domain_error("kl: q vanishes where p is positive");
    return px * std::log(px / qx);
  };
  if (piecewise_exact_pair(p, q)) {
    const auto grid = merged_grid(p, q);
    double v = 0.0;
    for (std::size_t s = 1; s < grid.size(); ++s)
      v += integrate(integrand, grid[s - 1], grid[s], 1e-10);
    return v;
  }
  return integrate(integrand, 0.0, 1.0, 1e-9);
}

double l2_sq(const Density& p, const Density& q) {
  if (piecewise_exact_pair(p, q)) {
    // (p - q)^2 is quadratic on each merged segment; Simpson is exact.
    const auto grid = merged_grid(p, q);
    double v = 0.0;
    for (std::size_t s = 1; s < grid.size(); ++s) {
      const double x0 = grid[s - 1], x1 = grid[s], xm = 0.5 * (x0 + x1);
      const double d0 = p(x0) - q(x0), dm = p(xm) - q(xm), d1 = p(x1) - q(x1);
      v += (x1 - x0) / 6.0 * (d0 * d0 + 4.0 * dm * dm + d1 * d1);
    }
    return v;
  }
  return integrate(
      [&](double x) {
        const double d = p(x) - q(x);
        return d * d;
      },
      0.0, 1.0, 1e-10);
}

double renyi_gaussian(double alpha, double mean_gap, double sigma) {
  if (!(alpha > 1.0)) throw std::domain_error("renyi_gaussian needs alpha > 1");
  if (!(sigma > 0.0)) throw std::domain_error("renyi_gaussian needs sigma > 0");
  return alpha * mean_gap * mean_gap / (2.0 * sigma * sigma);
}

int hamming(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

bool verify_code(const CodeSet& code) {
  const std::size_t target =
      static_cast<std::size_t>(std::ceil(std::pow(2.0, code.m / 8.0)));
  if (code.words.size() < target) return false;
  const std::vector<int> zero(static_cast<std::size_t>(code.m), 0);
  bool has_zero = false;
  for (const auto& w : code.words) {
    if (static_cast<int>(w.size()) != code.m) return false;
    if (w == zero) has_zero = true;
  }
  if (!has_zero) return false;
  for (std::size_t i = 0; i < code.words.size(); ++i)
    for (std::size_t j = i + 1; j < code.words.size(); ++j)
      if (8 * hamming(code.words[i], code.words[j]) < code.m) return false;
  return true;
}

CodeSet varshamov_gilbert(int m, RandomStream& stream) {
  if (m < 8) throw std::invalid_argument("varshamov_gilbert needs m >= 8");
  const std::size_t target =
      static_cast<std::size_t>(std::ceil(std::pow(2.0, m / 8.0)));
  CodeSet code{m, {std::vector<int>(static_cast<std::size_t>(m), 0)}};
  long attempts = 0;
  while (code.words.size() < target) {
    if (++attempts > 1000000)
      throw std::runtime_error(
          "varshamov_gilbert: retry budget exhausted with " +
          std::to_string(code.words.size()) + "/" + std::to_string(target) +
          " words");
    std::vector<int> w(static_cast<std::size_t>(m));
    for (int& b : w) b = stream.bernoulli() ? 1 : 0;
    bool ok = true;
    for (const auto& kept : code.words)
      if (8 * hamming(w, kept) < m) {
        ok = false;
        break;
      }
    if (ok) code.words.push_back(std::move(w));
  }
  if (!verify_code(code))
    throw std::logic_error("varshamov_gilbert produced an invalid code");
  return code;
}

PackingFamily make_packing(
    std::vector<std::shared_ptr<const Density>> members) {
  const std::size_t M = members.size();
  if (M < 2) throw std::invalid_argument("a packing needs >= 2 members");
  PackingFamily fam;
  fam.members = std::move(members);
  fam.pairwise_l2.assign(M, std::vector<double>(M, 0.0));
  fam.omega = 0.0;
  double min_dist = -1.0;
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = i + 1; j < M; ++j) {
      const double d = std::sqrt(l2_sq(*fam.members[i], *fam.members[j]));
      fam.pairwise_l2[i][j] = fam.pairwise_l2[j][i] = d;
      if (min_dist < 0.0 || d < min_dist) min_dist = d;
    }
  fam.omega = 0.5 * std::max(0.0, min_dist);
  return fam;
}

double lecam_bound(double tv01, long n,
                   const std::optional<PrivacyBudget>& budget) {
  if (tv01 < 0.0 || tv01 > 1.0 || n < 1)
    throw std::invalid_argument("lecam_bound inputs out of domain");
  double v;
  if (!budget) {
    v = 0.5 * std::pow(1.0 - tv01, static_cast<double>(n));
  } else {
    switch (budget->kind()) {
      case PrivacyBudget::Kind::kPure:
      case PrivacyBudget::Kind::kApprox: {
        const double eps = budget->epsilon();
        const double delta =
            budget->kind() == PrivacyBudget::Kind::kApprox ? budget->delta()
                                                           : 0.0;
        v = 0.5 * (std::pow(1.0 - (1.0 - std::exp(-eps)) * tv01,
                            static_cast<double>(n)) -
                   2.0 * n * std::exp(-eps) * delta * tv01);
        break;
      }
      case PrivacyBudget::Kind::kZCDP:
        v = 0.5 * (1.0 - n * std::sqrt(budget->rho() / 2.0) * tv01);
        break;
      default:
        throw std::logic_error("unreachable");
    }
  }
  return std::clamp(v, 0.0, 0.5);
}

double fano_bound(const std::vector<std::vector<double>>& pairwise_tv, int M,
                  long n, const PrivacyBudget& budget) {
  if (M < 2 || static_cast<int>(pairwise_tv.size()) != M)
    throw std::invalid_argument("fano_bound needs an M x M matrix, M >= 2");
  double sum_s = 0.0, sum_mixed = 0.0;
  for (int i = 0; i < M; ++i) {
    if (static_cast<int>(pairwise_tv[i].size()) != M)
      throw std::invalid_argument("fano_bound needs an M x M matrix");
    for (int j = 0; j < M; ++j) {
      const double t = pairwise_tv[i][j];
      const double s = 2.0 * t / (1.0 + t);
      sum_s += s;
      sum_mixed += s / n + s * s;
    }
  }
  double v;
  switch (budget.kind()) {
    case PrivacyBudget::Kind::kPure:
      v = 1.0 - (1.0 + n * budget.epsilon() / (static_cast<double>(M) * M) *
                           sum_s) /
                    std::log(static_cast<double>(M));
      break;
    case PrivacyBudget::Kind::kZCDP:
      v = 1.0 - (1.0 + static_cast<double>(n) * n * budget.rho() /
                           (static_cast<double>(M) * M) * sum_mixed) /
                    std::log(static_cast<double>(M));
      break;
    default:
      throw std::invalid_argument("fano_bound supports Pure and ZCDP budgets");
  }
  return std::clamp(v, 0.0, 1.0);
}

double fano_bound_classical(double mean_kl, int M, long n) {
  if (M < 2) throw std::invalid_argument("fano needs M >= 2");
  const double v = 1.0 - (1.0 + n * mean_kl) / std::log(static_cast<double>(M));
  return std::clamp(v, 0.0, 1.0);
}

double mean_kl_to_mixture(const PackingFamily& packing) {
  const std::size_t M = packing.members.size();
  auto mixture = [&](double x) {
    double v = 0.0;
    for (const auto& member : packing.members) v += (*member)(x);
    return v / static_cast<double>(M);
  };
  double total = 0.0;
  for (const auto& member : packing.members) {
    total += integrate(
        [&](double x) {
          const double px = (*member)(x);
          if (px <= 0.0) return 0.0;
          return px * std::log(px / mixture(x));
        },
        0.0, 1.0, 1e-9);
  }
  return total / static_cast<double>(M);
}

double assouad_bound(double tau, int m,
                     const std::vector<double>& per_coordinate_tv, long n,
                     double rho) {
  if (!(tau > 0.0) || m < 1 ||
      static_cast<int>(per_coordinate_tv.size()) != m || !(rho > 0.0))
    throw std::invalid_argument("assouad_bound inputs out of domain");
  double sum = 0.0;
  for (double t : per_coordinate_tv)
    sum += 0.5 * std::max(0.0, 1.0 - n * std::sqrt(rho / 2.0) * t);
  return tau / 16.0 * sum;
}

RateExponents theoretical_rate(const ClassSpec& cls, RiskMetricKind /*risk*/,
                               const std::optional<PrivacyBudget>& budget) {
  RateExponents out{};
  if (cls.kind == ClassSpec::Kind::kLipschitz) {
    out.nonprivate = -2.0 / 3.0;
    out.private_upper = out.private_lower = -1.0;
    out.gap = false;
  } else {
    const double b = cls.beta;
    out.nonprivate = -2.0 * b / (2.0 * b + 1.0);
    if (budget && budget->kind() == PrivacyBudget::Kind::kPure) {
      out.private_upper = -2.0 * b / (b + 1.5);
      out.private_lower = -2.0 * b / (b + 1.0);
      out.gap = out.private_upper != out.private_lower;
    } else {
      out.private_upper = out.private_lower = -2.0 * b / (b + 1.0);
      out.gap = false;
    }
  }
  if (!budget) {
    out.private_upper = out.private_lower = out.nonprivate;
    out.gap = false;
  }
  return out;
}

}  // namespace dpdens
