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

#ifndef DPDENS_DENSITIES_HPP
#define DPDENS_DENSITIES_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dpdens/rng.hpp"

namespace dpdens {

/// A probability density on [0, 1]: evaluable, integrable, sampleable.
/// Densities are immutable after construction; evaluation and sampling are
/// pure given a stream.
class Density {
 public:
  virtual ~Density() = default;

  virtual double operator()(double x) const = 0;

  /// An upper bound on the density, used as a rejection envelope.
  virtual double sup_bound() const = 0;

  /// One draw. Default: rejection sampling under the sup_bound envelope.
  virtual double sample_one(RandomStream& stream) const;

  /// Energy of the given derivative order, when available in closed or
  /// semi-closed form. Used to certify Sobolev tail bounds.
  virtual std::optional<double> derivative_energy(int /*order*/) const {
    return std::nullopt;
  }

  std::vector<double> sample(int n, RandomStream& stream) const;
};

/// The uniform density on [0, 1].
class UniformDensity final : public Density {
 public:
  double operator()(double) const override { return 1.0; }
  double sup_bound() const override { return 1.0; }
  double sample_one(RandomStream& stream) const override {
    return stream.uniform();
  }
  std::optional<double> derivative_energy(int order) const override {
    return order >= 1 ? std::optional<double>(0.0) : std::nullopt;
  }
};

/// Continuous piecewise-linear density given by breakpoints in [0, 1] and
/// values at them. The exact breakpoint representation makes TV and L2
/// between two such densities computable by piecewise-exact integration.
class PiecewiseLinearDensity final : public Density {
 public:
  /// breakpoints must be sorted, start at 0, end at 1; values nonnegative;
  /// the trapezoid integral must equal 1 within 1e-12.
  PiecewiseLinearDensity(std::vector<double> breakpoints,
                         std::vector<double> values);

  double operator()(double x) const override;
  double sup_bound() const override;
  double sample_one(RandomStream& stream) const override;  // exact inverse CDF

  double cdf(double x) const;
  double max_abs_slope() const;

  const std::vector<double>& breakpoints() const { return x_; }
  const std::vector<double>& values() const { return v_; }

 private:
  std::vector<double> x_;
  std::vector<double> v_;
  std::vector<double> cum_;  // CDF at each breakpoint
};

/// The C-infinity bump K0(x) = exp(-1/(1-x^2)) on (-1, 1) and its exact
/// derivatives, via the rational recurrence
///   K0^(i)(x) = K0(x) * P_i(x) / (1-x^2)^(2i).
namespace bump_kernel {
double k0(double x);
/// i-th derivative of K0 at x (exact rational recurrence, no finite
/// differences).
double k0_derivative(int i, double x);
}  // namespace bump_kernel

/// Largest nu (to 1e-6) such that K(x) = nu * K0(2x) satisfies
/// integral of (K^(beta))^2 <= 1. Cached per beta.
double normalize_kernel(int beta);

/// Sobolev bump-packing density:
///   1 - |omega|_1 L h^(beta+1) intK + L h^beta sum_i omega_i K((x - c_i)/h)
/// with c_i = i/(m+1) and K the normalized bump kernel.
class SmoothBumpPacking final : public Density {
 public:
  SmoothBumpPacking(double L, int beta, int m, std::vector<int> omega,
                    double h);

  double operator()(double x) const override;
  double sup_bound() const override;
  std::optional<double> derivative_energy(int order) const override;

  double L() const { return L_; }
  int beta() const { return beta_; }
  int m() const { return m_; }
  double h() const { return h_; }
  double nu() const { return nu_; }
  double baseline() const { return baseline_; }
  double kernel_integral() const { return int_k_; }
  double kernel_sq_integral() const { return int_k2_; }

 private:
  double L_;
  int beta_;
  int m_;
  std::vector<int> omega_;
  double h_;
  double nu_;
  double int_k_;   // integral of K
  double int_k2_;  // integral of K^2
  double baseline_;
  std::vector<double> centers_;
};

/// Truncated Fourier series on the basis
///   phi_1 = 1, phi_2k = sqrt(2) sin(2 pi k x), phi_2k+1 = sqrt(2) cos(2 pi k x).
class FourierSeries final : public Density {
 public:
  explicit FourierSeries(std::vector<double> coefficients);

  double operator()(double x) const override;
  double sup_bound() const override;

  const std::vector<double>& coefficients() const { return theta_; }
  int order() const { return static_cast<int>(theta_.size()); }

 private:
  std::vector<double> theta_;
};

/// Basis function phi_i (1-based index) at x.
double fourier_basis(int i, double x);

/// Smoothness class membership specification.
struct ClassSpec {
  enum class Kind { kLipschitz, kPeriodicSobolev };
  Kind kind;
  double L;
  int beta = 1;  // Sobolev only
};

struct MembershipReport {
  bool member;
  double quantity;   // measured slope or ellipsoid sum (with tail bound)
  double threshold;  // L or L^2/pi^(2 beta)
  std::string note;
};

/// Triangle deviation from uniform: constant 1 - L h^2 outside
/// [x0-h, x0+h], slopes +/-L inside, peak 1 - L h^2 + L h at x0.
PiecewiseLinearDensity make_triangle(double L, double x0, double h);

/// Multi-triangle saw: a +/-L triangle of half-width h at i/(m+1) for each
/// omega_i = 1, over the constant baseline 1 - |omega|_1 L h^2.
PiecewiseLinearDensity make_saw(double L, int m, const std::vector<int>& omega,
                                double h);

SmoothBumpPacking make_bump_packing(double L, int beta, int m,
                                    const std::vector<int>& omega, double h);

/// First N Fourier coefficients of the density, by adaptive quadrature to
/// absolute tolerance 1e-10.
FourierSeries fourier_coefficients(const Density& density, int N);

MembershipReport check_membership(const Density& density, const ClassSpec& spec);

}  // namespace dpdens

#endif  // DPDENS_DENSITIES_HPP
