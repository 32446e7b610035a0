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

#ifndef DPDENS_BUDGET_HPP
#define DPDENS_BUDGET_HPP

#include <functional>
#include <string>
#include <vector>

namespace dpdens {

/// An immutable privacy budget: pure epsilon-DP, rho-zCDP, or relaxed
/// (epsilon, delta)-DP. Single-shot mechanisms only; there is no
/// composition ledger.
class PrivacyBudget {
 public:
  enum class Kind { kPure, kZCDP, kApprox };

  static PrivacyBudget Pure(double epsilon);
  static PrivacyBudget ZCDP(double rho);
  static PrivacyBudget Approx(double epsilon, double delta);

  Kind kind() const { return kind_; }
  double epsilon() const;  // Pure or Approx only
  double rho() const;      // ZCDP only
  double delta() const;    // Approx only

  /// The unified budget parameter: epsilon for Pure, sqrt(rho) for ZCDP.
  /// Throws for Approx budgets, which have no unified parameter.
  double effective_alpha() const;

  std::string describe() const;

 private:
  PrivacyBudget(Kind kind, double epsilon, double rho, double delta)
      : kind_(kind), epsilon_(epsilon), rho_(rho), delta_(delta) {}

  Kind kind_;
  double epsilon_;
  double rho_;
  double delta_;
};

/// l1 / l2 sensitivity pair of a vector-valued dataset query.
struct Sensitivity {
  double l1;
  double l2;
};

/// Laplace mechanism scale: delta1 / epsilon.
double laplace_scale(double delta1, double epsilon);

/// Gaussian mechanism scale: delta2 / sqrt(2 * rho).
double gaussian_scale(double delta2, double rho);

/// epsilon-DP implies (epsilon^2 / 2)-zCDP.
double pure_to_zcdp(double epsilon);

/// rho-zCDP implies (rho + 2 sqrt(rho ln(1/delta)), delta)-DP.
double zcdp_to_approx(double rho, double delta);

/// Gaussian mechanism calibrated for (epsilon, delta)-DP:
/// sqrt(2 ln(1.25/delta)) * sensitivity_l2 / epsilon.
double relaxed_gaussian_scale(double sensitivity_l2, double epsilon,
                              double delta);

/// A deterministic query mapping a dataset (points in [0,1]) to a vector.
using DatasetQuery =
    std::function<std::vector<double>(const std::vector<double>&)>;

/// Exhaustive sensitivity computation: maximizes the query difference over
/// all dataset pairs from domain_grid^n at Hamming distance <= 1.
/// Feasible only for tiny n and grids; throws if the enumeration budget
/// (pair count) would exceed ~2e7.
Sensitivity sensitivity_bruteforce(const DatasetQuery& query,
                                   const std::vector<double>& domain_grid,
                                   int n);

}  // namespace dpdens

#endif  // DPDENS_BUDGET_HPP
