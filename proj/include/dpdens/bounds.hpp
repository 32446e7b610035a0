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

#ifndef DPDENS_BOUNDS_HPP
#define DPDENS_BOUNDS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dpdens/budget.hpp"
#include "dpdens/densities.hpp"
#include "dpdens/rng.hpp"

namespace dpdens {

/// Total variation distance between two densities on [0, 1]. Piecewise-exact
/// for pairs of piecewise-linear densities, adaptive quadrature (tol 1e-9)
/// otherwise.
double tv(const Density& p, const Density& q);

/// KL divergence integral of ln(p/q) p, by adaptive quadrature (tol 1e-9).
/// Throws if q vanishes where p does not.
double kl(const Density& p, const Density& q);

/// Squared L2 distance between two densities; piecewise-exact for
/// piecewise-linear pairs.
double l2_sq(const Density& p, const Density& q);

/// Renyi divergence of order alpha between N(0, sigma^2) and
/// N(mean_gap, sigma^2): alpha * mean_gap^2 / (2 sigma^2).
double renyi_gaussian(double alpha, double mean_gap, double sigma);

/// A Varshamov-Gilbert code: >= 2^(m/8) binary words of length m including
/// the zero word, pairwise Hamming distance >= m/8.
struct CodeSet {
  int m;
  std::vector<std::vector<int>> words;
};

int hamming(const std::vector<int>& a, const std::vector<int>& b);

/// Randomized greedy construction; the returned set is exhaustively
/// re-verified. Throws after 1e6 rejected samples.
CodeSet varshamov_gilbert(int m, RandomStream& stream);

/// True iff the set satisfies the code invariants (size, zero word,
/// pairwise distance). Used to replay the construction postcondition.
bool verify_code(const CodeSet& code);

/// A finite packing of densities with its pairwise L2 distance matrix and
/// radius Omega = (min off-diagonal distance) / 2.
struct PackingFamily {
  std::vector<std::shared_ptr<const Density>> members;
  std::vector<std::vector<double>> pairwise_l2;  // distances, not squares
  double omega;
};

PackingFamily make_packing(std::vector<std::shared_ptr<const Density>> members);

/// Testing-difficulty lower bound for a two-point packing with per-sample
/// total variation tv01, in [0, 1/2]. Without a budget this is the
/// product-measure bound (1/2)(1 - tv01)^n; under (eps, delta)-DP it is
/// (1/2)((1 - (1 - e^-eps) tv01)^n - 2 n e^-eps delta tv01); under rho-zCDP
/// it is max(0, (1/2)(1 - n sqrt(rho/2) tv01)).
double lecam_bound(double tv01, long n,
                   const std::optional<PrivacyBudget>& budget);

/// Multi-point testing-difficulty bound from the pairwise per-sample TV
/// matrix, for Pure and ZCDP budgets, clamped to [0, 1].
double fano_bound(const std::vector<std::vector<double>>& pairwise_tv, int M,
                  long n, const PrivacyBudget& budget);

/// Classical Fano bound 1 - (1 + n * mean_kl) / ln M, where mean_kl is the
/// mean per-sample KL divergence of the members to the mixture.
double fano_bound_classical(double mean_kl, int M, long n);

/// Mean per-sample KL of packing members to their uniform mixture, by
/// quadrature.
double mean_kl_to_mixture(const PackingFamily& packing);

/// Assouad bound (tau/16) sum_i (1/2) max(0, 1 - n sqrt(rho/2) t_i) where
/// t_i bounds the i-th coordinate mixture TV.
double assouad_bound(double tau, int m,
                     const std::vector<double>& per_coordinate_tv, long n,
                     double rho);

/// Minimax-rate exponents (in n and in n*alpha) for a class/risk/budget
/// combination: the non-private exponent, the private upper-bound exponent,
/// the private lower-bound exponent, and whether they differ.
struct RateExponents {
  double nonprivate;
  double private_upper;
  double private_lower;
  bool gap;
};

enum class RiskMetricKind { kPointwise, kSup, kL2 };

RateExponents theoretical_rate(const ClassSpec& cls, RiskMetricKind risk,
                               const std::optional<PrivacyBudget>& budget);

/// One evaluated lower bound with the packing parameters that produced it.
struct BoundReport {
  std::string kind;  // LeCam-pure | LeCam-zCDP | Fano-pure | Fano-zCDP | Assouad-zCDP
  int m;
  double h;
  double L;
  int beta;
  long n;
  std::string budget;
  double value;
};

}  // namespace dpdens

#endif  // DPDENS_BOUNDS_HPP
