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

#include "dpdens/densities.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "dpdens/quadrature.hpp"

namespace dpdens {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double Density::sample_one(RandomStream& stream) const {
  const double bound = sup_bound();
  for (;;) {
    const double x = stream.uniform();
    const double u = stream.uniform() * bound;
    if (u <= (*this)(x)) return x;
  }
}

std::vector<double> Density::sample(int n, RandomStream& stream) const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) out.push_back(sample_one(stream));
  return out;
}

// ---------------------------------------------------------------------------
// Piecewise-linear densities

PiecewiseLinearDensity::PiecewiseLinearDensity(std::vector<double> breakpoints,
                                               std::vector<double> values)
    : x_(std::move(breakpoints)), v_(std::move(values)) {
  if (x_.size() < 2 || x_.size() != v_.size())
    throw std::invalid_argument("breakpoints/values size mismatch");
  if (x_.front() != 0.0 || x_.back() != 1.0)
    throw std::invalid_argument("breakpoints must span [0, 1]");
  for (std::size_t i = 1; i < x_.size(); ++i)
    if (!(x_[i] > x_[i - 1]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
  for (double v : v_)
    if (v < 0.0) throw std::invalid_argument("density values must be >= 0");
  cum_.resize(x_.size());
  cum_[0] = 0.0;
  for (std::size_t i = 1; i < x_.size(); ++i)
    cum_[i] = cum_[i - 1] + 0.5 * (v_[i] + v_[i - 1]) * (x_[i] - x_[i - 1]);
  if (std::fabs(cum_.back() - 1.0) > 1e-12)
    throw std::invalid_argument("piecewise-linear density must integrate to 1");
}

double PiecewiseLinearDensity::operator()(double x) const {
  if (x < 0.0 || x > 1.0) throw std::invalid_argument("x outside [0, 1]");
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const std::size_t i = std::min<std::size_t>(x_.size() - 1,
                                              it - x_.begin()) - 1;
  const double t = (x - x_[i]) / (x_[i + 1] - x_[i]);
  return v_[i] + t * (v_[i + 1] - v_[i]);
}

double PiecewiseLinearDensity::sup_bound() const {
  return *std::max_element(v_.begin(), v_.end());
}

double PiecewiseLinearDensity::cdf(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const std::size_t i = (it - x_.begin()) - 1;
  const double dx = x - x_[i];
  const double s = (v_[i + 1] - v_[i]) / (x_[i + 1] - x_[i]);
  return cum_[i] + v_[i] * dx + 0.5 * s * dx * dx;
}

double PiecewiseLinearDensity::max_abs_slope() const {
  double m = 0.0;
  for (std::size_t i = 1; i < x_.size(); ++i)
    m = std::max(m, std::fabs((v_[i] - v_[i - 1]) / (x_[i] - x_[i - 1])));
  return m;
}

double PiecewiseLinearDensity::sample_one(RandomStream& stream) const {
  const double u = stream.uniform();
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
  const std::size_t i =
      std::min<std::size_t>(cum_.size() - 1, it - cum_.begin()) - 1;
  const double r = u - cum_[i];
  const double s = (v_[i + 1] - v_[i]) / (x_[i + 1] - x_[i]);
  // Solve v_i * t + s * t^2 / 2 = r for t in [0, segment length].
  const double disc = v_[i] * v_[i] + 2.0 * s * r;
  double t;
  if (std::fabs(s) < 1e-14) {
    t = v_[i] > 0.0 ? r / v_[i] : 0.0;
  } else {
    const double root = std::sqrt(std::max(0.0, disc));
    t = (v_[i] + root) > 0.0 ? 2.0 * r / (v_[i] + root) : 0.0;
  }
  return std::clamp(x_[i] + t, x_[i], x_[i + 1]);
}

// ---------------------------------------------------------------------------
// Bump kernel and its exact derivatives

namespace bump_kernel {

double k0(double x) {
  const double u = 1.0 - x * x;
  if (u <= 0.0) return 0.0;
  return std::exp(-1.0 / u);
}

namespace {

using Poly = std::vector<double>;  // coefficients, lowest degree first

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Poly poly_add(Poly a, const Poly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

Poly poly_deriv(const Poly& a) {
  if (a.size() <= 1) return {0.0};
  Poly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    d[i - 1] = a[i] * static_cast<double>(i);
  return d;
}

double poly_eval(const Poly& a, double x) {
  double v = 0.0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

// Numerators of K0^(i)(x) = K0(x) * P_i(x) / (1 - x^2)^(2i), built once by
// symbolic differentiation of the rational factor:
//   P_{i+1} = -2x P_i + P_i' (1 - x^2)^2 + 4 i x (1 - x^2) P_i.
Poly numerator(int order) {
  static std::vector<Poly> cache{{1.0}};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const Poly one_minus_x2{1.0, 0.0, -1.0};
  const Poly one_minus_x2_sq = poly_mul(one_minus_x2, one_minus_x2);
  while (static_cast<int>(cache.size()) <= order) {
    const int i = static_cast<int>(cache.size()) - 1;
    const Poly& p = cache.back();
    Poly next = poly_mul({0.0, -2.0}, p);
    next = poly_add(next, poly_mul(poly_deriv(p), one_minus_x2_sq));
    next = poly_add(next, poly_mul({0.0, 4.0 * i}, poly_mul(one_minus_x2, p)));
    cache.push_back(std::move(next));
  }
  return cache[static_cast<std::size_t>(order)];
}

}  // namespace

double k0_derivative(int i, double x) {
  if (i < 0) throw std::invalid_argument("derivative order must be >= 0");
  const double u = 1.0 - x * x;
  if (u <= 0.0) return 0.0;
  if (i == 0) return std::exp(-1.0 / u);
  const Poly num = numerator(i);
  const double p = poly_eval(num, x);
  if (p == 0.0) return 0.0;
  // Evaluate in log space: near |x| = 1 the exponential underflow and the
  // rational blow-up must cancel before rounding.
  const double logmag =
      -1.0 / u - 2.0 * i * std::log(u) + std::log(std::fabs(p));
  if (logmag < -700.0) return 0.0;
  return std::copysign(std::exp(logmag), p);
}

}  // namespace bump_kernel

namespace {

// integral over [-1, 1] of (K0^(beta))^2
double k0_derivative_sq_integral(int beta) {
  static std::map<int, double> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(beta);
  if (it != cache.end()) return it->second;
  const double v = integrate(
      [beta](double x) {
        const double d = bump_kernel::k0_derivative(beta, x);
        return d * d;
      },
      -1.0, 1.0, 1e-13);
  cache[beta] = v;
  return v;
}

}  // namespace

double normalize_kernel(int beta) {
  if (beta < 1) throw std::invalid_argument("beta must be >= 1");
  // K(x) = nu K0(2x), so int (K^(beta))^2 = nu^2 4^beta (1/2) int (K0^(beta))^2.
  const double i_beta = k0_derivative_sq_integral(beta);
  return 1.0 / std::sqrt(std::pow(4.0, beta) * 0.5 * i_beta);
}

// ---------------------------------------------------------------------------
// SmoothBumpPacking

SmoothBumpPacking::SmoothBumpPacking(double L, int beta, int m,
                                     std::vector<int> omega, double h)
    : L_(L), beta_(beta), m_(m), omega_(std::move(omega)), h_(h) {
  if (!(L > 0.0) || beta < 1 || m < 1 || !(h > 0.0))
    throw std::invalid_argument("bump packing parameters out of domain");
  if (static_cast<int>(omega_.size()) != m)
    throw std::invalid_argument("omega length must equal m");
  int weight = 0;
  for (int w : omega_) {
    if (w != 0 && w != 1) throw std::invalid_argument("omega must be 0/1");
    weight += w;
  }
  if (weight == 0)
    throw std::invalid_argument("omega must be nonzero (use UniformDensity)");
  if (!(h < 1.0 / (m + 1)))
    throw std::invalid_argument("bump packing needs h < 1/(m+1)");
  nu_ = normalize_kernel(beta);
  const double nu = nu_;
  int_k_ = integrate([nu](double x) { return nu * bump_kernel::k0(2.0 * x); },
                     -0.5, 0.5, 1e-13);
  int_k2_ = integrate(
      [nu](double x) {
        const double k = nu * bump_kernel::k0(2.0 * x);
        return k * k;
      },
      -0.5, 0.5, 1e-13);
  baseline_ = 1.0 - weight * L * std::pow(h, beta + 1) * int_k_;
  if (baseline_ < 0.0)
    throw std::invalid_argument("bump packing violates nonnegativity");
  // With the normalized kernel int (K^(beta))^2 = 1, so the Sobolev
  // membership condition m h int (K^(beta))^2 <= 1 reduces to m h <= 1.
  if (m * h > 1.0 + 1e-12)
    throw std::invalid_argument("bump packing violates Sobolev membership");
  for (int i = 0; i < m; ++i)
    if (omega_[i]) centers_.push_back(static_cast<double>(i + 1) / (m + 1));
}

double SmoothBumpPacking::operator()(double x) const {
  if (x < 0.0 || x > 1.0) throw std::invalid_argument("x outside [0, 1]");
  double v = baseline_;
  const double amp = L_ * std::pow(h_, beta_);
  for (double c : centers_) {
    const double t = (x - c) / h_;
    if (t > -0.5 && t < 0.5) v += amp * nu_ * bump_kernel::k0(2.0 * t);
  }
  return v;
}

double SmoothBumpPacking::sup_bound() const {
  return 1.0 + L_ * std::pow(h_, beta_) * nu_ * std::exp(-1.0);
}

std::optional<double> SmoothBumpPacking::derivative_energy(int order) const {
  if (order < 1) return std::nullopt;
  // g^(order) = L h^(beta - order) sum_i omega_i K^(order)((x - c_i)/h);
  // disjoint supports give |omega|_1 * h * int (K^(order))^2 after rescaling.
  const double int_kd2 =
      nu_ * nu_ * std::pow(4.0, order) * 0.5 * k0_derivative_sq_integral(order);
  const double weight = static_cast<double>(centers_.size());
  return L_ * L_ * std::pow(h_, 2 * (beta_ - order) + 1) * weight * int_kd2;
}

// ---------------------------------------------------------------------------
// Fourier series

double fourier_basis(int i, double x) {
  if (i < 1) throw std::invalid_argument("basis index is 1-based");
  if (i == 1) return 1.0;
  const int k = i / 2;
  const double a = 2.0 * kPi * k * x;
  return i % 2 == 0 ? std::sqrt(2.0) * std::sin(a) : std::sqrt(2.0) * std::cos(a);
}

FourierSeries::FourierSeries(std::vector<double> coefficients)
    : theta_(std::move(coefficients)) {
  if (theta_.empty()) throw std::invalid_argument("need at least one coefficient");
}

double FourierSeries::operator()(double x) const {
  double v = 0.0;
  for (int i = 0; i < order(); ++i) v += theta_[i] * fourier_basis(i + 1, x);
  return v;
}

double FourierSeries::sup_bound() const {
  double b = std::fabs(theta_[0]);
  for (int i = 1; i < order(); ++i) b += std::sqrt(2.0) * std::fabs(theta_[i]);
  return b;
}

// ---------------------------------------------------------------------------
// Constructions

PiecewiseLinearDensity make_triangle(double L, double x0, double h) {
  if (!(L > 0.0) || !(h > 0.0) || !(x0 > 0.0 && x0 < 1.0))
    throw std::invalid_argument("triangle parameters out of domain");
  if (h > std::min(x0, 1.0 - x0))
    throw std::invalid_argument("triangle needs h <= min(x0, 1-x0)");
  if (L * h * h > 1.0)
    throw std::invalid_argument("triangle needs L h^2 <= 1");
  const double base = 1.0 - L * h * h;
  std::vector<double> xs{0.0};
  std::vector<double> vs{base};
  if (x0 - h > 0.0) {
    xs.push_back(x0 - h);
    vs.push_back(base);
  }
  xs.push_back(x0);
  vs.push_back(base + L * h);
  if (x0 + h < 1.0) {
    xs.push_back(x0 + h);
    vs.push_back(base);
  }
  xs.push_back(1.0);
  vs.push_back(base);
  return PiecewiseLinearDensity(std::move(xs), std::move(vs));
}

PiecewiseLinearDensity make_saw(double L, int m, const std::vector<int>& omega,
                                double h) {
  if (!(L > 0.0) || m < 1 || !(h > 0.0))
    throw std::invalid_argument("saw parameters out of domain");
  if (static_cast<int>(omega.size()) != m)
    throw std::invalid_argument("omega length must equal m");
  int weight = 0;
  for (int w : omega) {
    if (w != 0 && w != 1) throw std::invalid_argument("omega must be 0/1");
    weight += w;
  }
  if (weight == 0) throw std::invalid_argument("omega must be nonzero");
  if (h > 0.5 / (m + 1))
    throw std::invalid_argument("saw needs h <= 1/(2(m+1))");
  if (!(weight * L * h * h < 1.0))
    throw std::invalid_argument("saw baseline would be nonpositive");
  const double base = 1.0 - weight * L * h * h;
  std::vector<double> xs{0.0};
  std::vector<double> vs{base};
  for (int i = 0; i < m; ++i) {
    if (!omega[i]) continue;
    const double c = static_cast<double>(i + 1) / (m + 1);
    xs.insert(xs.end(), {c - h, c, c + h});
    vs.insert(vs.end(), {base, base + L * h, base});
  }
  xs.push_back(1.0);
  vs.push_back(base);
  return PiecewiseLinearDensity(std::move(xs), std::move(vs));
}

SmoothBumpPacking make_bump_packing(double L, int beta, int m,
                                    const std::vector<int>& omega, double h) {
  return SmoothBumpPacking(L, beta, m, omega, h);
}

// ---------------------------------------------------------------------------
// Fourier coefficients and class membership

FourierSeries fourier_coefficients(const Density& density, int N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (const auto* fs = dynamic_cast<const FourierSeries*>(&density)) {
    std::vector<double> theta(fs->coefficients());
    theta.resize(static_cast<std::size_t>(N), 0.0);
    return FourierSeries(std::move(theta));
  }
  std::vector<double> theta(static_cast<std::size_t>(N));
  const auto* pwl = dynamic_cast<const PiecewiseLinearDensity*>(&density);
  for (int i = 1; i <= N; ++i) {
    auto f = [&density, i](double x) {
      return density(x) * fourier_basis(i, x);
    };
    double v = 0.0;
    if (pwl) {
      // Integrate segment by segment so the kinks never straddle a panel.
      const auto& xs = pwl->breakpoints();
      for (std::size_t s = 1; s < xs.size(); ++s)
        v += integrate(f, xs[s - 1], xs[s], 1e-11);
    } else {
      v = integrate(f, 0.0, 1.0, 1e-10);
    }
    theta[static_cast<std::size_t>(i - 1)] = v;
  }
  return FourierSeries(std::move(theta));
}

namespace {

double sobolev_weight(int j) {
  return j % 2 == 0 ? static_cast<double>(j) : static_cast<double>(j - 1);
}

}  // namespace

MembershipReport check_membership(const Density& density,
                                  const ClassSpec& spec) {
  MembershipReport report{};
  if (spec.kind == ClassSpec::Kind::kLipschitz) {
    double slope = 0.0;
    if (const auto* pwl = dynamic_cast<const PiecewiseLinearDensity*>(&density)) {
      slope = pwl->max_abs_slope();
    } else {
      const int grid = 10000;
      const double d = 1.0 / grid;
      for (int i = 0; i < grid; ++i)
        slope = std::max(
            slope, std::fabs(density((i + 1) * d) - density(i * d)) / d);
    }
    report.quantity = slope;
    report.threshold = spec.L;
    report.member = slope <= spec.L * (1.0 + 1e-9) + 1e-12;
    return report;
  }

  // Periodic Sobolev ellipsoid: sum_j a_j^(2 beta) theta_j^2 <= L^2 / pi^(2 beta).
  const int truncation = 256;
  const FourierSeries coeffs = fourier_coefficients(density, truncation);
  double sum = 0.0;
  for (int j = 2; j <= truncation; ++j) {
    const double a = sobolev_weight(j);
    sum += std::pow(a, 2 * spec.beta) * coeffs.coefficients()[j - 1] *
           coeffs.coefficients()[j - 1];
  }
  double tail = 0.0;
  if (dynamic_cast<const FourierSeries*>(&density)) {
    report.note = "finite series, tail exact";
  } else if (auto energy = density.derivative_energy(spec.beta + 1)) {
    // sum_{j>J} a_j^(2b) t_j^2 <= sum a_j^(2b+2) t_j^2 / a_{J+1}^2
    //                          <= E_{b+1} / (pi^(2b+2) a_{J+1}^2).
    const double a_next = sobolev_weight(truncation + 1);
    tail = *energy / (std::pow(kPi, 2 * spec.beta + 2) * a_next * a_next);
    report.note = "tail certified from derivative energy";
  } else {
    // No certificate available: report the last block as a tail estimate.
    for (int j = truncation - 15; j <= truncation; ++j) {
      const double a = sobolev_weight(j);
      tail += std::pow(a, 2 * spec.beta) * coeffs.coefficients()[j - 1] *
              coeffs.coefficients()[j - 1];
    }
    report.note = "tail estimated, not certified";
  }
  report.quantity = sum + tail;
  report.threshold = spec.L * spec.L / std::pow(kPi, 2 * spec.beta);
  report.member = report.quantity <= report.threshold * (1.0 + 1e-9) + 1e-12;
  return report;
}

}  // namespace dpdens
