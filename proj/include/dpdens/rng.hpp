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

#ifndef DPDENS_RNG_HPP
#define DPDENS_RNG_HPP

#include <cmath>
#include <cstdint>

namespace dpdens {

/// Deterministic uniform random stream (splitmix64 core).
///
/// Every sampler in the library draws from a stream like this one, so results
/// are reproducible across platforms from a single integer seed. Independent
/// substreams are derived with split(), which is a pure function of
/// (seed, index); parallel and serial replication orders therefore agree.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed), seed_(seed) {}

  /// Uniform draw in the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Centered Laplace draw of scale b, by inverse CDF from one uniform.
  double laplace(double b) {
    const double u = uniform() - 0.5;
    const double s = u < 0.0 ? -1.0 : 1.0;
    return -b * s * std::log(1.0 - 2.0 * s * u);
  }

  /// Centered Gaussian draw of standard deviation sigma (Box-Muller).
  double normal(double sigma) {
    const double u1 = uniform();
    const double u2 = uniform();
    return sigma * std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  /// One fair bit.
  bool bernoulli() { return (next() & 1u) != 0; }

  /// Independent child stream for replication `index`.
  RandomStream split(std::uint64_t index) const {
    std::uint64_t z = seed_ ^ (0xD1B54A32D192ED03ull * (index + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return RandomStream(z ^ (z >> 31));
  }

 private:
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  std::uint64_t seed_;
};

}  // namespace dpdens

#endif  // DPDENS_RNG_HPP
