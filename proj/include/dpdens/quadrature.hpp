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

#ifndef DPDENS_QUADRATURE_HPP
#define DPDENS_QUADRATURE_HPP

#include <functional>

namespace dpdens {

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b] to absolute
/// tolerance tol. Intervals are bisected until the embedded error estimate
/// falls below the locally allotted tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol);

}  // namespace dpdens

#endif  // DPDENS_QUADRATURE_HPP
