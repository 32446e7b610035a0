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

#include "dpdens/quadrature.hpp"

#include <cmath>
#include <cstdlib>

namespace dpdens {
namespace {

// Kronrod 15-point nodes and weights on [-1, 1]; the embedded Gauss 7-point
// rule uses the odd-index nodes.
const double kKronrodNodes[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,
    0.741531185599394,  0.864864423359769,  0.949107912342759,
    0.991455371120813};
const double kKronrodWeights[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979,
    0.022935322010529};
const double kGaussWeights[7] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870};

struct Panel {
  double integral;
  double error;
  double resabs;  // integral of |f|, for the roundoff floor
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  double kronrod = 0.0, gauss = 0.0, resabs = 0.0;
  for (int i = 0; i < 15; ++i) {
    const double v = f(c + r * kKronrodNodes[i]);
    kronrod += kKronrodWeights[i] * v;
    resabs += kKronrodWeights[i] * std::fabs(v);
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * v;
  }
  kronrod *= r;
  gauss *= r;
  resabs *= r;
  return {kronrod, std::fabs(kronrod - gauss), resabs};
}

// Integrands with features narrower than the node spacing can fool a single
// panel into reporting zero error, so a few levels of subdivision are always
// forced before a panel may be accepted.
constexpr int kMinDepth = 6;

double adapt(const std::function<double(double)>& f, double a, double b,
             double tol, int depth) {
  const Panel p = gk15(f, a, b);
  // A panel is accepted once it meets its share of the tolerance or its
  // error estimate is dominated by rounding; without the rounding floor an
  // unattainable tolerance would subdivide forever.
  const bool converged =
      p.error <= tol || p.error <= 100.0 * 2.2e-16 * p.resabs;
  if ((depth >= kMinDepth && converged) || depth >= 30) return p.integral;
  const double c = 0.5 * (a + b);
  return adapt(f, a, c, 0.5 * tol, depth + 1) +
         adapt(f, c, b, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (a == b) return 0.0;
  return adapt(f, a, b, tol, 0);
}

}  // namespace dpdens
