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

#include "dpdens/budget.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dpdens {

PrivacyBudget PrivacyBudget::Pure(double epsilon) {
  if (!(epsilon > 0.0)) throw std::domain_error("Pure budget needs epsilon > 0");
  return PrivacyBudget(Kind::kPure, epsilon, 0.0, 0.0);
}

PrivacyBudget PrivacyBudget::ZCDP(double rho) {
  if (!(rho > 0.0)) throw std::domain_error("ZCDP budget needs rho > 0");
  return PrivacyBudget(Kind::kZCDP, 0.0, rho, 0.0);
}

PrivacyBudget PrivacyBudget::Approx(double epsilon, double delta) {
  if (!(epsilon > 0.0)) throw std::domain_error("Approx budget needs epsilon > 0");
  if (!(delta >= 0.0 && delta < 1.0))
    throw std::domain_error("Approx budget needs delta in [0, 1)");
  return PrivacyBudget(Kind::kApprox, epsilon, 0.0, delta);
}

double PrivacyBudget::epsilon() const {
  if (kind_ == Kind::kZCDP) throw std::logic_error("ZCDP budget has no epsilon");
  return epsilon_;
}

double PrivacyBudget::rho() const {
  if (kind_ != Kind::kZCDP) throw std::logic_error("only ZCDP budgets carry rho");
  return rho_;
}

double PrivacyBudget::delta() const {
  if (kind_ != Kind::kApprox) throw std::logic_error("only Approx budgets carry delta");
  return delta_;
}

double PrivacyBudget::effective_alpha() const {
  switch (kind_) {
    case Kind::kPure:
      return epsilon_;
    case Kind::kZCDP:
      return std::sqrt(rho_);
    case Kind::kApprox:
      throw std::logic_error("effective_alpha is undefined for Approx budgets");
  }
  throw std::logic_error("unreachable");
}

std::string PrivacyBudget::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kPure:
      os << "pure(eps=" << epsilon_ << ")";
      break;
    case Kind::kZCDP:
      os << "zcdp(rho=" << rho_ << ")";
      break;
    case Kind::kApprox:
      os << "approx(eps=" << epsilon_ << ",delta=" << delta_ << ")";
      break;
  }
  return os.str();
}

double laplace_scale(double delta1, double epsilon) {
  if (!(delta1 > 0.0) || !(epsilon > 0.0))
    throw std::domain_error("laplace_scale needs positive inputs");
  return delta1 / epsilon;
}

double gaussian_scale(double delta2, double rho) {
  if (!(delta2 > 0.0) || !(rho > 0.0))
    throw std::domain_error("gaussian_scale needs positive inputs");
  return delta2 / std::sqrt(2.0 * rho);
}

double pure_to_zcdp(double epsilon) {
  if (!(epsilon > 0.0)) throw std::domain_error("pure_to_zcdp needs epsilon > 0");
  return 0.5 * epsilon * epsilon;
}

double zcdp_to_approx(double rho, double delta) {
  if (!(rho > 0.0)) throw std::domain_error("zcdp_to_approx needs rho > 0");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("zcdp_to_approx needs delta in (0, 1)");
  return rho + 2.0 * std::sqrt(rho * std::log(1.0 / delta));
}

double relaxed_gaussian_scale(double sensitivity_l2, double epsilon,
                              double delta) {
  if (!(sensitivity_l2 > 0.0) || !(epsilon > 0.0))
    throw std::domain_error("relaxed_gaussian_scale needs positive inputs");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("relaxed_gaussian_scale needs delta in (0, 1)");
  return std::sqrt(2.0 * std::log(1.25 / delta)) * sensitivity_l2 / epsilon;
}

namespace {

double norm1(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::fabs(a[i] - b[i]);
  return s;
}

double norm2(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

Sensitivity sensitivity_bruteforce(const DatasetQuery& query,
                                   const std::vector<double>& domain_grid,
                                   int n) {
  const std::size_t g = domain_grid.size();
  if (n < 1 || n > 4 || g == 0 || g > 32)
    throw std::invalid_argument("sensitivity_bruteforce needs 1 <= n <= 4 and grid size <= 32");
  // Datasets: g^n, neighbors: n * g alternatives each.
  double pair_count = 1.0;
  for (int i = 0; i < n; ++i) pair_count *= static_cast<double>(g);
  pair_count *= static_cast<double>(n) * static_cast<double>(g);
  if (pair_count > 2e7)
    throw std::length_error("sensitivity_bruteforce enumeration budget exceeded");

  std::vector<int> idx(n, 0);
  std::vector<double> data(n);
  Sensitivity best{0.0, 0.0};
  while (true) {
    for (int i = 0; i < n; ++i) data[i] = domain_grid[idx[i]];
    const std::vector<double> base = query(data);
    for (int pos = 0; pos < n; ++pos) {
      const double saved = data[pos];
      for (std::size_t k = 0; k < g; ++k) {
        data[pos] = domain_grid[k];
        const std::vector<double> alt = query(data);
        if (alt.size() != base.size())
          throw std::invalid_argument("query output dimension must be fixed");
        best.l1 = std::max(best.l1, norm1(base, alt));
        best.l2 = std::max(best.l2, norm2(base, alt));
      }
      data[pos] = saved;
    }
    int carry = n - 1;
    while (carry >= 0 && ++idx[carry] == static_cast<int>(g)) idx[carry--] = 0;
    if (carry < 0) break;
  }
  return best;
}

}  // namespace dpdens
